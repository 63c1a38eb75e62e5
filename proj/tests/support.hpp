#pragma once

// Test-only oracles and generators. The oracles recompute everything from the
// raw letters with their own indexing and never call the library's eta,
// catalog, or invariant code.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "flatlink/gauss_code.hpp"
#include "flatlink/genlab.hpp"
#include "flatlink/invariant.hpp"

namespace flatlink::testing {

// Signed count strictly between `from` and `to`, read off a doubled copy of
// the word.
inline int brute_eta(const Codeword& word, std::size_t from, std::size_t to) {
  const std::size_t n = word.size();
  std::vector<int> doubled;
  for (int rep = 0; rep < 2; ++rep) {
    for (const auto& l : word.letters) doubled.push_back(l.sign == Sign::Plus ? 1 : -1);
  }
  const std::size_t end = to > from ? to : to + n;
  return std::accumulate(doubled.begin() + static_cast<std::ptrdiff_t>(from) + 1,
                         doubled.begin() + static_cast<std::ptrdiff_t>(end), 0);
}

struct Where {
  std::size_t component;
  std::size_t position;
};

inline std::map<std::string, std::map<Sign, Where>> locate_letters(const FlatLinkCode& code) {
  std::map<std::string, std::map<Sign, Where>> at;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    for (std::size_t p = 0; p < code.components[c].size(); ++p) {
      const Letter& l = code.components[c].letters[p];
      at[l.crossing][l.sign] = {c, p};
    }
  }
  return at;
}

// Every bijection between `plus` and `minus`, as index permutations.
template <typename F>
void for_each_pairing(std::size_t n, F&& visit) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    visit(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Pair-term sum for every pairing of the crossings between components a and b.
inline std::vector<std::int64_t> all_pairing_sums(const FlatLinkCode& code, std::size_t a, std::size_t b) {
  const auto at = locate_letters(code);
  std::vector<std::string> plus_on_a, minus_on_a;
  for (const auto& [id, ends] : at) {
    const Where p = ends.at(Sign::Plus);
    const Where m = ends.at(Sign::Minus);
    if (p.component == a && m.component == b) plus_on_a.push_back(id);
    if (m.component == a && p.component == b) minus_on_a.push_back(id);
  }
  std::vector<std::int64_t> sums;
  if (plus_on_a.size() != minus_on_a.size()) return sums;
  for_each_pairing(plus_on_a.size(), [&](const std::vector<std::size_t>& perm) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      const auto& x = at.at(plus_on_a[i]);
      const auto& y = at.at(minus_on_a[perm[i]]);
      s += brute_eta(code.components[a], x.at(Sign::Plus).position, y.at(Sign::Minus).position);
      s += brute_eta(code.components[b], y.at(Sign::Plus).position, x.at(Sign::Minus).position);
    }
    sums.push_back(s);
  });
  return sums;
}

// True iff some pairing of the ab-crossings has every pair's eta-sum zero.
inline bool exhaustive_zero_sum_exists(const FlatLinkCode& code, std::size_t a, std::size_t b) {
  const auto at = locate_letters(code);
  std::vector<std::string> plus_on_a, minus_on_a;
  for (const auto& [id, ends] : at) {
    const Where p = ends.at(Sign::Plus);
    const Where m = ends.at(Sign::Minus);
    if (p.component == a && m.component == b) plus_on_a.push_back(id);
    if (m.component == a && p.component == b) minus_on_a.push_back(id);
  }
  if (plus_on_a.size() != minus_on_a.size()) return false;
  bool found = false;
  for_each_pairing(plus_on_a.size(), [&](const std::vector<std::size_t>& perm) {
    if (found) return;
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      const auto& x = at.at(plus_on_a[i]);
      const auto& y = at.at(minus_on_a[perm[i]]);
      ok = brute_eta(code.components[a], x.at(Sign::Plus).position, y.at(Sign::Minus).position) +
               brute_eta(code.components[b], y.at(Sign::Plus).position, x.at(Sign::Minus).position) ==
           0;
    }
    found = ok;
  });
  return found;
}

// Independent recomputation of the link invariant. Pair coefficients use the
// first enumerated pairing.
inline LinkInvariant oracle_link_polynomial(const FlatLinkCode& code) {
  LinkInvariant inv;
  const auto at = locate_letters(code);
  const std::size_t k = code.components.size();
  std::vector<int> totals(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    std::map<int, std::int64_t> terms;
    for (const auto& l : code.components[c].letters) totals[c] += l.sign == Sign::Plus ? 1 : -1;
    for (const auto& [id, ends] : at) {
      const Where p = ends.at(Sign::Plus);
      const Where m = ends.at(Sign::Minus);
      if (p.component != c || m.component != c) continue;
      const int e = brute_eta(code.components[c], p.position, m.position);
      if (e != 0) terms[std::abs(e)] += e;
    }
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    inv.component_polys[code.components[c].name] = SparsePoly(terms);
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const auto& na = code.components[a].name;
      const auto& nb = code.components[b].name;
      const std::size_t lo = na < nb ? a : b;
      const std::size_t hi = na < nb ? b : a;
      std::int64_t diff = 0;
      for (const auto& [id, ends] : at) {
        const Where p = ends.at(Sign::Plus);
        const Where m = ends.at(Sign::Minus);
        if (p.component == lo && m.component == hi) ++diff;
        if (m.component == lo && p.component == hi) --diff;
      }
      const NamePair key = make_name_pair(na, nb);
      inv.linking_diffs[key] = diff;
      if (diff == 0 && totals[a] == 0 && totals[b] == 0) inv.pair_coeffs[key] = all_pairing_sums(code, a, b).front();
    }
  }
  return inv;
}

// Random valid code: up to `max_crossings` crossings over 1..max_components
// components. With `balanced`, every pairwise linking difference is zero.
inline FlatLinkCode random_code(std::mt19937_64& rng, std::size_t max_crossings, std::size_t max_components,
                                bool balanced) {
  GenSpec spec;
  spec.components = 1 + rng() % max_components;
  spec.seed = rng();
  spec.balanced = balanced;
  std::size_t budget = rng() % (max_crossings + 1);
  spec.self_crossings.assign(spec.components, 0);
  while (budget > 0) {
    const std::size_t a = rng() % spec.components;
    const std::size_t b = rng() % spec.components;
    if (a == b) {
      ++spec.self_crossings[a];
      --budget;
    } else {
      const std::size_t step = balanced ? 2 : 1;
      if (budget < step) break;
      spec.pair_crossings[{std::min(a, b), std::max(a, b)}] += step;
      budget -= step;
    }
  }
  return random_flat_link(spec);
}

// Random cyclic word with the requested total sign (letters need not pair up).
inline Codeword random_word(std::mt19937_64& rng, std::size_t length, int total) {
  Codeword w{"A", {}};
  const std::size_t plus = (length + static_cast<std::size_t>(total)) / 2;
  for (std::size_t i = 0; i < length; ++i) {
    w.letters.push_back({"w" + std::to_string(i), i < plus ? Sign::Plus : Sign::Minus});
  }
  std::shuffle(w.letters.begin(), w.letters.end(), rng);
  return w;
}

}  // namespace flatlink::testing
