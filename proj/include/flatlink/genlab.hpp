#pragma once

// Random generation, exhaustive enumeration, and witness search over small
// flat link codes.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "flatlink/gauss_code.hpp"

namespace flatlink {

struct GenSpec {
  std::size_t components = 1;
  // Per component; missing entries mean zero.
  std::vector<std::size_t> self_crossings;
  // Keyed by (a, b) with a < b.
  std::map<ComponentPair, std::size_t> pair_crossings;
  std::uint64_t seed = 0;
  // Split every pair's crossings evenly by which component gets the + end.
  bool balanced = false;
};

// Crossings are named 1, 2, 3, ...; components get default names.
FlatLinkCode random_flat_link(const GenSpec& spec);

inline constexpr std::size_t kEnumerationCap = 6;

// Calls `visit` on every code with exactly `crossings` crossings and
// `components` components, with crossings labelled a, b, ... in order of first
// appearance. Every rotation/relabel class is visited at least once. Return
// false from `visit` to stop early.
void for_each_raw_code(std::size_t crossings, std::size_t components,
                       const std::function<bool(const FlatLinkCode&)>& visit);

// One representative per rotation + relabel class (its canonical form), in
// increasing canonical-key order.
std::vector<FlatLinkCode> enumerate_small_codes(std::size_t crossings, std::size_t components,
                                                std::size_t cap = kEnumerationCap);

enum class SearchGoal { ZeroPolyNoFilamentation, NonzeroMultiComponent };

std::string_view to_string(SearchGoal goal);
SearchGoal parse_search_goal(std::string_view text);

struct SearchLimits {
  std::size_t max_components = 2;
  std::size_t max_crossings = 8;
  std::size_t jobs = 1;
};

// Searches codes by increasing crossing count, then component count, then
// enumeration order. ZeroPolyNoFilamentation: zero invariant and the
// exhaustive oracle finds no filamentation (at least 2 components).
// NonzeroMultiComponent: at least 3 components, none empty, some nonzero pair
// coefficient. The witness found does not depend on `jobs`.
std::optional<FlatLinkCode> search_examples(SearchGoal goal, const SearchLimits& limits);

bool is_witness(SearchGoal goal, const FlatLinkCode& code);

}  // namespace flatlink
