#include "flatlink/invariant.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "flatlink/error.hpp"

namespace flatlink {

SparsePoly::SparsePoly(Terms terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

void SparsePoly::add_term(int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto& slot = terms_[exponent];
  slot += coeff;
  if (slot == 0) terms_.erase(exponent);
}

std::int64_t SparsePoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::string SparsePoly::to_string(const std::string& variable) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const std::int64_t mag = std::llabs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag;
    out << variable;
    if (e != 1) out << '^' << e;
    first = false;
  }
  return out.str();
}

NamePair make_name_pair(const std::string& a, const std::string& b) {
  return a < b ? NamePair{a, b} : NamePair{b, a};
}

bool LinkInvariant::is_zero() const {
  return std::all_of(component_polys.begin(), component_polys.end(), [](const auto& kv) { return kv.second.is_zero(); }) &&
         std::all_of(pair_coeffs.begin(), pair_coeffs.end(), [](const auto& kv) { return kv.second == 0; }) &&
         std::all_of(linking_diffs.begin(), linking_diffs.end(), [](const auto& kv) { return kv.second == 0; });
}

bool PairPartition::contains(const CrossingPair& p) const {
  return std::find(pairs.begin(), pairs.end(), p) != pairs.end();
}

namespace {

void check_components(const FlatLinkCode& code, std::size_t a, std::size_t b) {
  const std::size_t n = code.component_count();
  if (a >= n) throw Error(ErrorCode::ComponentOutOfRange, std::to_string(a));
  if (b >= n) throw Error(ErrorCode::ComponentOutOfRange, std::to_string(b));
  if (a == b) throw Error(ErrorCode::SameComponent, code.components[a].name);
}

}  // namespace

int flat_linking_diff(const FlatLinkCode& code, const CrossingCatalog& catalog, std::size_t a, std::size_t b) {
  check_components(code, a, b);
  int diff = 0;
  for (std::size_t idx : catalog.crossings_between(a, b)) {
    diff += catalog.crossings[idx].plus.component == a ? 1 : -1;
  }
  return diff;
}

int flat_linking_diff(const FlatLinkCode& code, std::size_t a, std::size_t b) {
  return flat_linking_diff(code, validate(code), a, b);
}

SparsePoly self_polynomial(const FlatLinkCode& code, const CrossingCatalog& catalog, std::size_t component) {
  if (component >= code.component_count()) throw Error(ErrorCode::ComponentOutOfRange, std::to_string(component));
  const Codeword& word = code.components[component];
  SparsePoly poly;
  for (std::size_t idx : catalog.self_crossings[component]) {
    const CrossingInfo& x = catalog.crossings[idx];
    const int e = eta(word, x.plus.position, x.minus.position);
    if (e != 0) poly.add_term(std::abs(e), e);
  }
  return poly;
}

SparsePoly self_polynomial(const FlatLinkCode& code, std::size_t component) {
  return self_polynomial(code, validate(code), component);
}

PairPartition choose_pair_partition(const FlatLinkCode& code, const CrossingCatalog& catalog, std::size_t a,
                                    std::size_t b) {
  if (const int diff = flat_linking_diff(code, catalog, a, b); diff != 0) {
    throw Error(ErrorCode::NonzeroFlatLinking, code.components[a].name + "," + code.components[b].name,
                "linking difference " + std::to_string(diff));
  }
  std::vector<std::pair<std::size_t, std::string>> plus_ends, minus_ends;
  for (std::size_t idx : catalog.crossings_between(a, b)) {
    const CrossingInfo& x = catalog.crossings[idx];
    if (x.plus.component == a) {
      plus_ends.emplace_back(x.plus.position, x.id);
    } else {
      minus_ends.emplace_back(x.minus.position, x.id);
    }
  }
  std::sort(plus_ends.begin(), plus_ends.end());
  std::sort(minus_ends.begin(), minus_ends.end());
  PairPartition partition{a, b, {}};
  for (std::size_t i = 0; i < plus_ends.size(); ++i) {
    partition.pairs.push_back({plus_ends[i].second, minus_ends[i].second});
  }
  return partition;
}

PairPartition choose_pair_partition(const FlatLinkCode& code, std::size_t a, std::size_t b) {
  return choose_pair_partition(code, validate(code), a, b);
}

int pair_eta_sum(const FlatLinkCode& code, const CrossingCatalog& catalog, const std::string& x,
                 const std::string& y) {
  if (x == y) throw Error(ErrorCode::InvalidPartition, x, "a pair needs two distinct crossings");
  if (!catalog.contains(x)) throw Error(ErrorCode::InvalidPartition, x, "unknown crossing");
  if (!catalog.contains(y)) throw Error(ErrorCode::InvalidPartition, y, "unknown crossing");
  const CrossingInfo& cx = catalog.at(x);
  const CrossingInfo& cy = catalog.at(y);
  if (cx.plus.component != cy.minus.component || cx.minus.component != cy.plus.component) {
    throw Error(ErrorCode::InvalidPartition, x + "," + y, "x+ and y- must share a component, as must x- and y+");
  }
  return eta(code.components[cx.plus.component], cx.plus.position, cy.minus.position) +
         eta(code.components[cy.plus.component], cy.plus.position, cx.minus.position);
}

void check_partition(const CrossingCatalog& catalog, const PairPartition& partition) {
  const std::size_t a = partition.first;
  const std::size_t b = partition.second;
  if (a == b) throw Error(ErrorCode::InvalidPartition, std::to_string(a), "partition needs two components");
  std::set<std::string> expected;
  for (std::size_t idx : catalog.crossings_between(a, b)) expected.insert(catalog.crossings[idx].id);
  std::set<std::string> used;
  for (const auto& p : partition.pairs) {
    for (const auto* id : {&p.plus_on_first, &p.minus_on_first}) {
      if (!expected.count(*id)) throw Error(ErrorCode::InvalidPartition, *id, "not a crossing between the two components");
      if (!used.insert(*id).second) throw Error(ErrorCode::InvalidPartition, *id, "crossing used twice");
    }
    if (catalog.at(p.plus_on_first).plus.component != a) {
      throw Error(ErrorCode::InvalidPartition, p.plus_on_first, "its + end is not on the first component");
    }
    if (catalog.at(p.minus_on_first).minus.component != a) {
      throw Error(ErrorCode::InvalidPartition, p.minus_on_first, "its - end is not on the first component");
    }
  }
  if (used != expected) throw Error(ErrorCode::InvalidPartition, "", "partition does not cover every crossing");
}

std::int64_t pair_coefficient(const FlatLinkCode& code, std::size_t a, std::size_t b,
                              const PairPartition& partition) {
  const CrossingCatalog catalog = validate(code);
  check_components(code, a, b);
  if (std::minmax(a, b) != std::minmax(partition.first, partition.second)) {
    throw Error(ErrorCode::InvalidPartition, "", "partition is for a different component pair");
  }
  check_partition(catalog, partition);
  std::int64_t sum = 0;
  for (const auto& p : partition.pairs) sum += pair_eta_sum(code, catalog, p.plus_on_first, p.minus_on_first);
  return sum;
}

LinkInvariant link_polynomial(const FlatLinkCode& code) {
  const CrossingCatalog catalog = validate(code);
  LinkInvariant inv;
  const std::size_t n = code.component_count();
  std::vector<int> totals(n);
  for (std::size_t c = 0; c < n; ++c) {
    inv.component_polys[code.components[c].name] = self_polynomial(code, catalog, c);
    totals[c] = total_sign(code, c);
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = c + 1; d < n; ++d) {
      const std::string& nc = code.components[c].name;
      const std::string& nd = code.components[d].name;
      const int diff = nc < nd ? flat_linking_diff(code, catalog, c, d) : flat_linking_diff(code, catalog, d, c);
      const NamePair key = make_name_pair(nc, nd);
      inv.linking_diffs[key] = diff;
      if (diff != 0 || totals[c] != 0 || totals[d] != 0) continue;
      std::int64_t sum = 0;
      for (const auto& p : choose_pair_partition(code, catalog, c, d).pairs) {
        sum += pair_eta_sum(code, catalog, p.plus_on_first, p.minus_on_first);
      }
      inv.pair_coeffs[key] = sum;
    }
  }
  return inv;
}

bool invariants_equal(const LinkInvariant& lhs, const LinkInvariant& rhs, bool up_to_component_bijection) {
  if (!up_to_component_bijection) return lhs == rhs;
  if (lhs.component_polys.size() != rhs.component_polys.size()) return false;
  if (lhs.pair_coeffs.size() != rhs.pair_coeffs.size() || lhs.linking_diffs.size() != rhs.linking_diffs.size()) {
    return false;
  }
  std::vector<std::string> from, to;
  for (const auto& kv : lhs.component_polys) from.push_back(kv.first);
  for (const auto& kv : rhs.component_polys) to.push_back(kv.first);

  do {
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < from.size(); ++i) rename[from[i]] = to[i];
    bool ok = true;
    for (const auto& [name, poly] : lhs.component_polys) {
      if (!(rhs.component_polys.at(rename[name]) == poly)) {
        ok = false;
        break;
      }
    }
    for (auto it = lhs.pair_coeffs.begin(); ok && it != lhs.pair_coeffs.end(); ++it) {
      auto found = rhs.pair_coeffs.find(make_name_pair(rename[it->first.first], rename[it->first.second]));
      ok = found != rhs.pair_coeffs.end() && found->second == it->second;
    }
    for (auto it = lhs.linking_diffs.begin(); ok && it != lhs.linking_diffs.end(); ++it) {
      const std::string& a = rename[it->first.first];
      const std::string& b = rename[it->first.second];
      auto found = rhs.linking_diffs.find(make_name_pair(a, b));
      // The stored difference is measured on the smaller name; renaming may flip that.
      const std::int64_t expected = a < b ? it->second : -it->second;
      ok = found != rhs.linking_diffs.end() && found->second == expected;
    }
    if (ok) return true;
  } while (std::next_permutation(to.begin(), to.end()));
  return false;
}

std::string to_text(const LinkInvariant& inv) {
  std::ostringstream out;
  for (const auto& [name, poly] : inv.component_polys) {
    out << "component " << name << ": " << poly.to_string("t") << '\n';
  }
  for (const auto& [key, diff] : inv.linking_diffs) {
    out << "pair " << key.first << "," << key.second << ": ";
    if (auto it = inv.pair_coeffs.find(key); it != inv.pair_coeffs.end()) {
      out << "coeff " << it->second;
    } else {
      out << "undefined";
    }
    out << " (linking diff " << diff << ")\n";
  }
  return out.str();
}

}  // namespace flatlink
