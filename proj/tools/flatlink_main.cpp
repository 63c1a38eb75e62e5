#include <iostream>
#include <string>
#include <vector>

#include "flatlink/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flatlink::cli::run(args, std::cin, std::cout, std::cerr);
}
