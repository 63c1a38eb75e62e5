#include "flatlink/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flatlink/error.hpp"
#include "flatlink/filament.hpp"
#include "flatlink/genlab.hpp"
#include "flatlink/invariant.hpp"
#include "flatlink/json_io.hpp"
#include "flatlink/moves.hpp"

namespace flatlink::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::string input;
  std::uint64_t seed = 0;
  std::size_t steps = 0;
  std::string policy;
  std::string kinds;
  std::vector<std::string> sites;
  std::size_t cap = kOracleCrossingCap;
  std::size_t crossings = 0;
  std::size_t components = 1;
  std::string goal;
  std::string limits;
  std::size_t max_crossings = 8;
  std::size_t max_components = 2;
  std::size_t jobs = 1;
};

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FlatLinkCode read_code(const Options& opt, std::istream& in) {
  if (opt.input.empty() || opt.input == "-") return parse_flat_link(read_all(in));
  std::ifstream file(opt.input);
  if (!file) throw CLI::FileError::Missing(opt.input);
  return parse_flat_link(read_all(file));
}

bool as_json(const Options& opt) { return opt.format == "json"; }

std::string halved(std::int64_t diff) {
  std::string s = std::to_string(diff / 2);
  if (diff % 2 != 0) s = (diff < 0 && diff / 2 == 0 ? "-" : "") + s + ".5";
  return s;
}

void print_filamentation(const std::optional<Filamentation>& f, const std::string& label, std::ostream& out) {
  if (!f) {
    out << label << ": no filamentation exists\n";
    return;
  }
  out << label << ": filamentation exists\n";
  out << "mono:";
  for (const auto& x : f->mono) out << ' ' << x;
  out << "\nbi:";
  for (const auto& [x, y] : f->bi) out << " {" << x << ',' << y << '}';
  out << '\n';
}

int cmd_validate(const Options& opt, std::istream& in, std::ostream& out) {
  const FlatLinkCode code = read_code(opt, in);
  const CrossingCatalog catalog = validate(code);
  const auto name = [&](std::size_t c) { return code.components[c].name; };
  if (as_json(opt)) {
    json crossings = json::array();
    for (const auto& x : catalog.crossings) {
      if (x.is_self()) {
        crossings.push_back({{"id", x.id}, {"kind", "self"}, {"component", name(x.plus.component)}});
      } else {
        crossings.push_back({{"id", x.id}, {"kind", "pair"}, {"plus", name(x.plus.component)},
                             {"minus", name(x.minus.component)}});
      }
    }
    json names = json::array();
    for (const auto& w : code.components) names.push_back(w.name);
    out << json{{"valid", true}, {"components", names}, {"crossings", crossings}}.dump() << '\n';
    return kExitOk;
  }
  out << "valid: " << code.component_count() << " components, " << catalog.crossings.size() << " crossings\n";
  for (const auto& x : catalog.crossings) {
    if (x.is_self()) {
      out << x.id << ": self " << name(x.plus.component) << '\n';
    } else {
      out << x.id << ": pair " << name(x.plus.component) << "(+) " << name(x.minus.component) << "(-)\n";
    }
  }
  return kExitOk;
}

int cmd_invariant(const Options& opt, std::istream& in, std::ostream& out) {
  const LinkInvariant inv = link_polynomial(read_code(opt, in));
  if (as_json(opt)) {
    out << to_json(inv).dump() << '\n';
  } else {
    out << to_text(inv);
  }
  return kExitOk;
}

int cmd_linking(const Options& opt, std::istream& in, std::ostream& out) {
  const LinkInvariant inv = link_polynomial(read_code(opt, in));
  bool nontrivial = false;
  json rows = json::array();
  for (const auto& [key, diff] : inv.linking_diffs) {
    nontrivial = nontrivial || diff != 0;
    rows.push_back({{"a", key.first}, {"b", key.second}, {"diff", diff}, {"flat_linking_number", diff / 2.0}});
  }
  if (as_json(opt)) {
    out << json{{"linking", rows}, {"nontrivial", nontrivial}}.dump() << '\n';
    return kExitOk;
  }
  for (const auto& [key, diff] : inv.linking_diffs) {
    out << key.first << ',' << key.second << ": diff " << diff << " (flat linking number " << halved(diff) << ")\n";
  }
  out << (nontrivial ? "nonzero flat linking: the link is nontrivial\n" : "all flat linking numbers vanish\n");
  return kExitOk;
}

int cmd_filament(const Options& opt, std::istream& in, std::ostream& out, bool oracle) {
  const FlatLinkCode code = read_code(opt, in);
  const auto f = oracle ? brute_force_filamentation(code, opt.cap) : link_filamentation(code);
  if (as_json(opt)) {
    out << to_json(f).dump() << '\n';
  } else {
    print_filamentation(f, oracle ? "oracle" : "filament", out);
  }
  return kExitOk;
}

std::set<MoveKind> parse_kinds(const std::string& text) {
  std::set<MoveKind> kinds;
  if (text.empty()) return {kAllMoveKinds.begin(), kAllMoveKinds.end()};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) kinds.insert(parse_move_kind(item));
  return kinds;
}

int cmd_moves_list(const Options& opt, std::istream& in, std::ostream& out) {
  const auto sites = find_move_sites(read_code(opt, in), parse_kinds(opt.kinds));
  if (as_json(opt)) {
    json lines = json::array();
    for (const auto& s : sites) lines.push_back(to_log_line(s));
    out << json{{"sites", lines}}.dump() << '\n';
  } else {
    for (const auto& s : sites) out << to_log_line(s) << '\n';
  }
  return kExitOk;
}

int cmd_moves_apply(const Options& opt, std::istream& in, std::ostream& out) {
  FlatLinkCode code = read_code(opt, in);
  validate(code);
  for (const auto& line : opt.sites) code = apply_move(code, parse_log_line(line));
  if (as_json(opt)) {
    out << json{{"code", render_flat_link(code)}}.dump() << '\n';
  } else {
    out << render_flat_link(code) << '\n';
  }
  return kExitOk;
}

int cmd_moves_walk(const Options& opt, std::istream& in, std::ostream& out) {
  const FlatLinkCode code = read_code(opt, in);
  const WalkResult walk = random_walk(code, opt.steps, opt.seed, MovePolicy::parse(opt.policy));
  if (as_json(opt)) {
    json log = json::array();
    for (const auto& s : walk.log) log.push_back(to_log_line(s));
    out << json{{"code", render_flat_link(walk.code)}, {"log", log}}.dump() << '\n';
    return kExitOk;
  }
  // Log lines are comments, so the output parses as the resulting code.
  for (const auto& s : walk.log) out << "# " << to_log_line(s) << '\n';
  out << render_flat_link(walk.code) << '\n';
  return kExitOk;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const auto codes = enumerate_small_codes(opt.crossings, opt.components);
  if (as_json(opt)) {
    json list = json::array();
    for (const auto& c : codes) list.push_back(render_flat_link(c));
    out << json{{"codes", list}, {"count", codes.size()}}.dump() << '\n';
  } else {
    for (const auto& c : codes) out << render_flat_link(c) << '\n';
  }
  return kExitOk;
}

void apply_limits(Options& opt) {
  if (opt.limits.empty()) return;
  std::stringstream ss(opt.limits);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    const std::string key = item.substr(0, eq);
    if (eq == std::string::npos) throw Error(ErrorCode::MalformedToken, item, "expected key=value in --limits");
    std::size_t value = 0;
    try {
      value = std::stoul(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedToken, item, "expected an integer in --limits");
    }
    if (key == "crossings") {
      opt.max_crossings = value;
    } else if (key == "components") {
      opt.max_components = value;
    } else {
      throw Error(ErrorCode::MalformedToken, item, "--limits keys are crossings and components");
    }
  }
}

int cmd_search(Options opt, std::ostream& out) {
  apply_limits(opt);
  const SearchGoal goal = parse_search_goal(opt.goal);
  const auto witness = search_examples(goal, {opt.max_components, opt.max_crossings, opt.jobs});
  json report = {{"goal", to_string(goal)}, {"found", witness.has_value()}};
  if (witness) {
    report["code"] = render_flat_link(*witness);
    report["invariant"] = to_json(link_polynomial(*witness));
    report["filamentation"] = to_json(link_filamentation(*witness));
    report["oracle"] = to_json(brute_force_filamentation(*witness));
  }
  if (as_json(opt)) {
    out << report.dump() << '\n';
    return kExitOk;
  }
  if (!witness) {
    out << "# no witness for " << to_string(goal) << " within " << opt.max_crossings << " crossings and "
        << opt.max_components << " components\n";
    return kExitOk;
  }
  out << "# witness for " << to_string(goal) << '\n';
  out << "# report: " << report.dump() << '\n';
  out << render_flat_link(*witness) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial invariant and filamentations of flat virtual links given by Gauss codes", "flatlink"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto input = [&](CLI::App* sub) { sub->add_option("input", opt.input, "Code file (default: stdin)"); };

  auto* validate_cmd = app.add_subcommand("validate", "Check a Gauss code and classify its crossings");
  auto* invariant_cmd = app.add_subcommand("invariant", "Compute the link polynomial");
  auto* linking_cmd = app.add_subcommand("linking", "Report flat linking differences");
  auto* filament_cmd = app.add_subcommand("filament", "Decide and construct a filamentation");
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive filamentation search");
  oracle_cmd->add_option("--cap", opt.cap, "Maximum crossing count");
  for (auto* sub : {validate_cmd, invariant_cmd, linking_cmd, filament_cmd, oracle_cmd}) input(sub);

  auto* moves_cmd = app.add_subcommand("moves", "Flat Reidemeister moves");
  moves_cmd->require_subcommand(1);
  auto* list_cmd = moves_cmd->add_subcommand("list", "List applicable move sites as log lines");
  list_cmd->add_option("--kinds", opt.kinds, "Comma-separated move kinds (default: all)");
  auto* apply_cmd = moves_cmd->add_subcommand("apply", "Apply move log lines in order");
  apply_cmd->add_option("--site", opt.sites, "A move log line")->required();
  auto* walk_cmd = moves_cmd->add_subcommand("walk", "Apply random moves");
  walk_cmd->add_option("--steps", opt.steps, "Number of moves")->required();
  walk_cmd->add_option("--seed", opt.seed, "Random seed")->required();
  walk_cmd->add_option("--policy", opt.policy, "Kind weights, e.g. R1Insert=1,R3=4");
  for (auto* sub : {list_cmd, apply_cmd, walk_cmd}) input(sub);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "One code per rotation/relabel class");
  enumerate_cmd->add_option("--crossings", opt.crossings, "Exact crossing count")->required();
  enumerate_cmd->add_option("--components", opt.components, "Component count");

  auto* search_cmd = app.add_subcommand("search", "Search for a witness code");
  search_cmd->add_option("--goal", opt.goal, "zero-poly-no-filamentation | nonzero-multi-component")->required();
  search_cmd->add_option("--limits", opt.limits, "crossings=N,components=K");
  search_cmd->add_option("--max-crossings", opt.max_crossings, "Crossing bound");
  search_cmd->add_option("--max-components", opt.max_components, "Component bound");
  search_cmd->add_option("--jobs", opt.jobs, "Worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(opt, in, out);
    if (*invariant_cmd) return cmd_invariant(opt, in, out);
    if (*linking_cmd) return cmd_linking(opt, in, out);
    if (*filament_cmd) return cmd_filament(opt, in, out, false);
    if (*oracle_cmd) return cmd_filament(opt, in, out, true);
    if (*list_cmd) return cmd_moves_list(opt, in, out);
    if (*apply_cmd) return cmd_moves_apply(opt, in, out);
    if (*walk_cmd) return cmd_moves_walk(opt, in, out);
    if (*enumerate_cmd) return cmd_enumerate(opt, out);
    if (*search_cmd) return cmd_search(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_validation_error(e.code()) ? kExitInvalidCode : kExitUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace flatlink::cli
