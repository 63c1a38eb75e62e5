// Acceptance suite: one PASS/FAIL line per criterion, exact integer checks,
// each with its own wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "flatlink/filament.hpp"
#include "flatlink/genlab.hpp"
#include "flatlink/invariant.hpp"
#include "flatlink/json_io.hpp"
#include "flatlink/moves.hpp"
#include "support.hpp"

using namespace flatlink;
namespace ft = flatlink::testing;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (v.ok && secs >= budget_s) v.fail("over time budget");
  if (!v.ok) ++failures;
  std::printf("%s  [%2d] %s  (%.2fs / %.0fs)%s%s\n", v.ok ? "PASS" : "FAIL", id, title, secs, budget_s,
              v.note.empty() ? "" : "  ", v.note.c_str());
  std::fflush(stdout);
}

// Cyclic triangle (a+ c-), (b+ a-), (c+ b-) spliced into the code. At most two
// distinct components are used so the linking differences stay zero.
FlatLinkCode with_triangle(FlatLinkCode code, std::mt19937_64& rng) {
  const std::size_t k = code.component_count();
  std::size_t comps[3] = {rng() % k, rng() % k, rng() % k};
  if (comps[0] != comps[1] && comps[1] != comps[2] && comps[0] != comps[2]) comps[2] = comps[0];
  const auto ids = fresh_crossing_ids(code, 3);
  const Letter pairs[3][2] = {{{ids[0], Sign::Plus}, {ids[2], Sign::Minus}},
                              {{ids[1], Sign::Plus}, {ids[0], Sign::Minus}},
                              {{ids[2], Sign::Plus}, {ids[1], Sign::Minus}}};
  for (int s = 0; s < 3; ++s) {
    auto& letters = code.components[comps[s]].letters;
    const auto at = letters.begin() + static_cast<std::ptrdiff_t>(rng() % (letters.size() + 1));
    letters.insert(at, {pairs[s][0], pairs[s][1]});
  }
  return code;
}

Verdict eta_laws() {
  Verdict v;
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 1000; ++i) {
    const FlatLinkCode code = ft::random_code(rng, 12, 3, i % 2 == 0);
    validate(code);
    for (std::size_t c = 0; c < code.component_count(); ++c) {
      const Codeword& w = code.components[c];
      const std::size_t n = w.size();
      const int total = total_sign(code, c);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (x == y) continue;
          const int exy = eta(code, c, x, y);
          if (exy != ft::brute_eta(w, x, y)) v.fail("eta disagrees with recount");
          if (exy + eta(code, c, y, x) != total - value(w.letters[x].sign) - value(w.letters[y].sign)) {
            v.fail("reciprocity");
          }
          for (std::size_t z = 0; z < n; ++z) {
            if (z == x || z == y) continue;
            // y strictly inside the forward arc from x to z.
            const bool inside = (y + n - x) % n < (z + n - x) % n;
            if (inside && eta(code, c, x, z) != exy + value(w.letters[y].sign) + eta(code, c, y, z)) {
              v.fail("additivity");
            }
          }
        }
      }
    }
  }
  return v;
}

Verdict partition_independence() {
  Verdict v;
  std::mt19937_64 rng(2002);
  std::size_t pairings = 0;
  for (int i = 0; i < 200; ++i) {
    GenSpec spec;
    spec.components = 2;
    spec.self_crossings = {rng() % 4, rng() % 4};
    spec.pair_crossings[{0, 1}] = 2 * (1 + rng() % 5);
    spec.balanced = true;
    spec.seed = rng();
    const FlatLinkCode code = random_flat_link(spec);
    const CrossingCatalog cat = validate(code);
    if (flat_linking_diff(code, 0, 1) != 0) v.fail("generator produced nonzero linking");
    std::vector<std::string> plus_on_a, minus_on_a;
    for (std::size_t idx : cat.crossings_between(0, 1)) {
      const auto& x = cat.crossings[idx];
      (x.plus.component == 0 ? plus_on_a : minus_on_a).push_back(x.id);
    }
    const std::int64_t reference = pair_coefficient(code, 0, 1, choose_pair_partition(code, 0, 1));
    for (std::int64_t s : ft::all_pairing_sums(code, 0, 1)) {
      if (s != reference) v.fail("oracle pairing sum differs");
    }
    ft::for_each_pairing(plus_on_a.size(), [&](const std::vector<std::size_t>& perm) {
      PairPartition part{0, 1, {}};
      for (std::size_t j = 0; j < perm.size(); ++j) part.pairs.push_back({plus_on_a[j], minus_on_a[perm[j]]});
      if (pair_coefficient(code, 0, 1, part) != reference) v.fail("pair coefficient depends on the pairing");
      ++pairings;
    });
  }
  v.note = std::to_string(pairings) + " pairings";
  return v;
}

Verdict move_invariance() {
  Verdict v;
  std::mt19937_64 rng(3003);
  std::array<std::size_t, 5> used{};
  for (int i = 0; i < 500; ++i) {
    FlatLinkCode code = ft::random_code(rng, 8, 3, true);
    if (i % 2 == 0) code = with_triangle(code, rng);
    const LinkInvariant start = link_polynomial(code);
    MovePolicy policy;
    policy.weights = {1.0, 2.0, 1.0, 2.0, 4.0};
    const WalkResult walk = random_walk(code, 30, rng(), policy);
    FlatLinkCode cur = code;
    for (const auto& site : walk.log) {
      cur = apply_move(cur, site);
      ++used[static_cast<std::size_t>(site.kind)];
      if (!(link_polynomial(cur) == start)) {
        v.fail("invariant changed at " + to_log_line(site) + " on " + render_flat_link(code));
      }
    }
    if (!(cur == walk.code)) v.fail("replay mismatch");
  }
  std::ostringstream note;
  note << "moves:";
  for (std::size_t k = 0; k < used.size(); ++k) note << ' ' << to_string(kAllMoveKinds[k]) << '=' << used[k];
  if (used[4] == 0 || used[2] == 0 || used[3] == 0) v.fail("some move kind never fired");
  if (v.ok) v.note = note.str();
  return v;
}

void check_knot(const FlatLinkCode& code, Verdict& v, std::size_t& filamented) {
  const bool zero = self_polynomial(code, 0).is_zero();
  const auto built = component_filamentation(code, 0);
  const auto oracle = brute_force_filamentation(code);
  if (built.has_value() != zero || oracle.has_value() != zero) v.fail("equivalence broken on " + render_flat_link(code));
  if (built && !verify_filamentation(code, *built).empty()) v.fail("constructed witness rejected");
  if (oracle && !verify_filamentation(code, *oracle).empty()) v.fail("oracle witness rejected");
  if (zero) ++filamented;
}

Verdict knots() {
  Verdict v;
  std::size_t filamented = 0, seen = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& code : enumerate_small_codes(n, 1)) {
      check_knot(code, v, filamented);
      ++seen;
    }
  }
  std::mt19937_64 rng(4004);
  for (int i = 0; i < 500; ++i) {
    GenSpec spec;
    spec.self_crossings = {rng() % 9};
    spec.seed = rng();
    check_knot(random_flat_link(spec), v, filamented);
    ++seen;
  }
  if (v.ok) v.note = std::to_string(seen) + " knots, " + std::to_string(filamented) + " filamented";
  return v;
}

Verdict links() {
  Verdict v;
  std::mt19937_64 rng(5005);
  std::size_t filamented = 0;
  for (int i = 0; i < 500; ++i) {
    FlatLinkCode code;
    do {
      code = ft::random_code(rng, kOracleCrossingCap, 3, i % 4 != 0);
    } while (code.component_count() < 2);
    const auto f = brute_force_filamentation(code);
    if (!f) continue;
    ++filamented;
    if (!verify_filamentation(code, *f).empty()) v.fail("oracle witness rejected");
    if (!link_polynomial(code).is_zero()) v.fail("counterexample " + render_flat_link(code));
  }
  if (filamented == 0) v.fail("no filamented sample");
  if (v.ok) v.note = std::to_string(filamented) + " filamented links";
  return v;
}

Verdict greedy_and_exchange() {
  Verdict v;
  std::mt19937_64 rng(6006);
  std::size_t successes = 0;
  for (int i = 0; i < 300; ++i) {
    GenSpec spec;
    spec.components = 2;
    spec.self_crossings = {rng() % 3, rng() % 3};
    spec.pair_crossings[{0, 1}] = 2 * (1 + rng() % 6);
    spec.balanced = true;
    spec.seed = rng();
    const FlatLinkCode code = random_flat_link(spec);
    const auto greedy = greedy_zero_sum_partition(code, 0, 1);
    if (greedy.has_value() != ft::exhaustive_zero_sum_exists(code, 0, 1)) {
      v.fail("greedy disagrees on " + render_flat_link(code));
    }
    if (greedy && !is_zero_sum(code, validate(code), greedy->pairing)) v.fail("greedy result not 0-sum");
    successes += greedy.has_value();
  }

  std::size_t scenarios = 0;
  for (int attempt = 0; scenarios < 1000 && attempt < 200000; ++attempt) {
    GenSpec spec;
    spec.components = 2;
    spec.self_crossings = {rng() % 3, rng() % 3};
    spec.pair_crossings[{0, 1}] = 2 * (2 + rng() % 5);
    spec.balanced = true;
    spec.seed = rng();
    const FlatLinkCode code = random_flat_link(spec);
    const auto zsp = greedy_zero_sum_partition(code, 0, 1);
    if (!zsp) continue;
    const CrossingCatalog cat = validate(code);
    const auto& pairs = zsp->pairing.pairs;
    const auto& x = pairs[rng() % pairs.size()];
    const auto& y = pairs[rng() % pairs.size()];
    const CrossingPair target{x.plus_on_first, y.minus_on_first};
    if (zsp->pairing.contains(target) || pair_eta_sum(code, cat, target.plus_on_first, target.minus_on_first) != 0) {
      continue;
    }
    const auto swapped = exchange_into(code, *zsp, target);
    if (!swapped || !swapped->pairing.contains(target) || !is_zero_sum(code, cat, swapped->pairing)) {
      v.fail("exchange broke the 0-sum property on " + render_flat_link(code));
    }
    ++scenarios;
  }
  if (scenarios < 1000) v.fail("only " + std::to_string(scenarios) + " exchange scenarios");
  if (v.ok) v.note = std::to_string(successes) + "/300 greedy successes, " + std::to_string(scenarios) + " exchanges";
  return v;
}

Verdict search_zero_poly() {
  Verdict v;
  const auto w = search_examples(SearchGoal::ZeroPolyNoFilamentation, {2, 8, 4});
  if (!w) {
    v.fail("no witness within bounds");
    return v;
  }
  if (!link_polynomial(*w).is_zero()) v.fail("invariant not zero");
  if (!ft::oracle_link_polynomial(*w).is_zero()) v.fail("oracle invariant not zero");
  if (brute_force_filamentation(*w)) v.fail("oracle found a filamentation");
  if (link_filamentation(*w)) v.fail("constructor found a filamentation");
  if (v.ok) v.note = render_flat_link(*w);
  return v;
}

Verdict search_nonzero() {
  Verdict v;
  const auto w = search_examples(SearchGoal::NonzeroMultiComponent, {3, 8, 4});
  if (!w) {
    v.fail("no witness within bounds");
    return v;
  }
  if (w->component_count() < 3) v.fail("fewer than 3 components");
  const LinkInvariant inv = link_polynomial(*w);
  const LinkInvariant oracle = ft::oracle_link_polynomial(*w);
  bool nonzero = false;
  for (const auto& [key, coeff] : inv.pair_coeffs) nonzero = nonzero || coeff != 0;
  if (!nonzero) v.fail("all pair coefficients vanish");
  if (!(inv == oracle)) v.fail("oracle disagrees");
  if (v.ok) v.note = render_flat_link(*w) + "  " + to_json(inv).dump();
  return v;
}

Verdict goldens() {
  Verdict v;
  const FlatLinkCode knot = parse_flat_link("a+ b+ a- c- b- c+");
  const SparsePoly expected_knot(SparsePoly::Terms{{1, 2}, {2, -2}});
  if (!(self_polynomial(knot, 0) == expected_knot)) v.fail("self polynomial");
  if (!(ft::oracle_link_polynomial(knot).component_polys.at("A") == expected_knot)) v.fail("oracle self polynomial");

  const FlatLinkCode link = parse_flat_link("x+ a+ y- a- ; y+ x-");
  LinkInvariant expected;
  expected.component_polys["A"] = SparsePoly(SparsePoly::Terms{{1, -1}});
  expected.component_polys["B"] = SparsePoly();
  expected.pair_coeffs[{"A", "B"}] = 1;
  expected.linking_diffs[{"A", "B"}] = 0;
  if (!(link_polynomial(link) == expected)) v.fail("link polynomial");
  if (!(ft::oracle_link_polynomial(link) == expected)) v.fail("oracle link polynomial");
  if (v.ok) v.note = self_polynomial(knot, 0).to_string() + "; " + to_text(link_polynomial(link));
  while (!v.note.empty() && v.note.back() == '\n') v.note.pop_back();
  for (auto& ch : v.note) {
    if (ch == '\n') ch = ' ';
  }
  return v;
}

Verdict bifilament_identity() {
  Verdict v;
  std::mt19937_64 rng(1010);
  std::size_t pairs = 0;
  for (int i = 0; i < 1000; ++i) {
    const FlatLinkCode code = ft::random_code(rng, 12, 3, true);
    const auto at = ft::locate_letters(code);
    for (std::size_t c = 0; c < code.component_count(); ++c) {
      if (total_sign(code, c) != 0) v.fail("nonzero total sign in sample");
      const Codeword& w = code.components[c];
      std::vector<std::pair<std::size_t, std::size_t>> chords;
      for (const auto& [id, ends] : at) {
        const auto& p = ends.at(Sign::Plus);
        const auto& m = ends.at(Sign::Minus);
        if (p.component == c && m.component == c) chords.push_back({p.position, m.position});
      }
      for (const auto& x : chords) {
        for (const auto& y : chords) {
          if (x == y) continue;
          ++pairs;
          if (eta(w, x.first, y.second) + eta(w, y.first, x.second) != eta(w, x.first, x.second) + eta(w, y.first, y.second)) {
            v.fail("identity fails on " + render_flat_link(code));
          }
        }
      }
    }
  }
  if (v.ok) v.note = std::to_string(pairs) + " ordered pairs";
  return v;
}

}  // namespace

int main() {
  criterion(1, "eta reciprocity and additivity", 10, eta_laws);
  criterion(2, "pair coefficient independent of the pairing", 30, partition_independence);
  criterion(3, "invariant unchanged along random move walks", 60, move_invariance);
  criterion(4, "knots: filamentation <=> zero polynomial <=> oracle", 60, knots);
  criterion(5, "links: oracle filamentation => zero invariant", 60, links);
  criterion(6, "greedy 0-sum pairing complete; exchange keeps 0-sum", 60, greedy_and_exchange);
  criterion(7, "search: zero invariant without filamentation", 300, search_zero_poly);
  criterion(8, "search: 3+ components with nonzero pair coefficient", 60, search_nonzero);
  criterion(9, "golden values match the independent recomputation", 1, goldens);
  criterion(10, "knot bifilament identity", 10, bifilament_identity);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
