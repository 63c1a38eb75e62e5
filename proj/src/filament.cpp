#include "flatlink/filament.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "flatlink/error.hpp"

namespace flatlink {

Filamentation Filamentation::normalized() const {
  Filamentation out = *this;
  for (auto& [x, y] : out.bi) {
    if (y < x) std::swap(x, y);
  }
  std::sort(out.mono.begin(), out.mono.end());
  std::sort(out.bi.begin(), out.bi.end());
  return out;
}

void Filamentation::append(const Filamentation& other) {
  mono.insert(mono.end(), other.mono.begin(), other.mono.end());
  bi.insert(bi.end(), other.bi.begin(), other.bi.end());
}

namespace {

bool structurally_pairable(const CrossingInfo& x, const CrossingInfo& y) {
  return x.plus.component == y.minus.component && x.minus.component == y.plus.component;
}

int self_eta(const FlatLinkCode& code, const CrossingInfo& x) {
  return eta(code.components[x.plus.component], x.plus.position, x.minus.position);
}

}  // namespace

std::vector<FilamentViolation> verify_filamentation(const FlatLinkCode& code, const Filamentation& f) {
  const CrossingCatalog catalog = validate(code);
  std::set<std::string> used;
  auto claim = [&](const std::string& id) {
    if (!catalog.contains(id)) throw Error(ErrorCode::PartitionNotCovering, id, "not a crossing of the code");
    if (!used.insert(id).second) throw Error(ErrorCode::PartsOverlap, id);
  };
  for (const auto& x : f.mono) claim(x);
  for (const auto& [x, y] : f.bi) {
    claim(x);
    claim(y);
  }
  for (const auto& c : catalog.crossings) {
    if (!used.count(c.id)) throw Error(ErrorCode::PartitionNotCovering, c.id, "crossing is in no part");
  }

  std::vector<FilamentViolation> violations;
  for (const auto& id : f.mono) {
    const CrossingInfo& x = catalog.at(id);
    if (!x.is_self()) {
      violations.push_back({FilamentViolation::Kind::Structural, {id}, 0,
                            "monofilament joins two different components"});
      continue;
    }
    if (const int e = self_eta(code, x); e != 0) {
      violations.push_back({FilamentViolation::Kind::NonzeroEta, {id}, e, "eta(x+,x-) = " + std::to_string(e)});
    }
  }
  for (const auto& [xid, yid] : f.bi) {
    const CrossingInfo& x = catalog.at(xid);
    const CrossingInfo& y = catalog.at(yid);
    if (!structurally_pairable(x, y)) {
      violations.push_back({FilamentViolation::Kind::Structural, {xid, yid}, 0,
                            "x+ and y- (or x- and y+) lie on different components"});
      continue;
    }
    if (const int e = pair_eta_sum(code, catalog, xid, yid); e != 0) {
      violations.push_back({FilamentViolation::Kind::NonzeroEta, {xid, yid}, e,
                            "eta(x+,y-) + eta(y+,x-) = " + std::to_string(e)});
    }
  }
  return violations;
}

std::optional<Filamentation> component_filamentation(const FlatLinkCode& code, std::size_t component) {
  const CrossingCatalog catalog = validate(code);
  if (const int s = total_sign(code, component); s != 0) {
    throw Error(ErrorCode::NonzeroTotalSign, code.components[component].name, "total sign " + std::to_string(s));
  }
  Filamentation f;
  std::map<int, std::vector<std::string>> positive, negative;
  for (std::size_t idx : catalog.self_crossings[component]) {
    const CrossingInfo& x = catalog.crossings[idx];
    const int e = self_eta(code, x);
    if (e == 0) {
      f.mono.push_back(x.id);
    } else if (e > 0) {
      positive[e].push_back(x.id);
    } else {
      negative[-e].push_back(x.id);
    }
  }
  std::set<int> magnitudes;
  for (const auto& kv : positive) magnitudes.insert(kv.first);
  for (const auto& kv : negative) magnitudes.insert(kv.first);
  for (int n : magnitudes) {
    const auto& pos = positive[n];
    const auto& neg = negative[n];
    if (pos.size() != neg.size()) return std::nullopt;
    for (std::size_t i = 0; i < pos.size(); ++i) f.bi.emplace_back(pos[i], neg[i]);
  }
  return f;
}

bool is_zero_sum(const FlatLinkCode& code, const CrossingCatalog& catalog, const PairPartition& p) {
  return std::all_of(p.pairs.begin(), p.pairs.end(), [&](const CrossingPair& pair) {
    return pair_eta_sum(code, catalog, pair.plus_on_first, pair.minus_on_first) == 0;
  });
}

std::optional<ZeroSumPartition> greedy_zero_sum_partition(const FlatLinkCode& code, std::size_t a, std::size_t b) {
  const CrossingCatalog catalog = validate(code);
  // Reuses the first-fit order and the linking check of the default partition.
  const PairPartition order = choose_pair_partition(code, catalog, a, b);
  std::vector<std::string> plus_ends, minus_ends;
  for (const auto& p : order.pairs) {
    plus_ends.push_back(p.plus_on_first);
    minus_ends.push_back(p.minus_on_first);
  }

  ZeroSumPartition result{PairPartition{a, b, {}}};
  std::vector<bool> plus_used(plus_ends.size()), minus_used(minus_ends.size());
  for (std::size_t round = 0; round < plus_ends.size(); ++round) {
    bool found = false;
    for (std::size_t i = 0; i < plus_ends.size() && !found; ++i) {
      if (plus_used[i]) continue;
      for (std::size_t j = 0; j < minus_ends.size(); ++j) {
        if (minus_used[j]) continue;
        if (pair_eta_sum(code, catalog, plus_ends[i], minus_ends[j]) == 0) {
          plus_used[i] = minus_used[j] = true;
          result.pairing.pairs.push_back({plus_ends[i], minus_ends[j]});
          found = true;
          break;
        }
      }
    }
    if (!found) return std::nullopt;
  }
  return result;
}

std::optional<Filamentation> link_filamentation(const FlatLinkCode& code) {
  const CrossingCatalog catalog = validate(code);
  const std::size_t n = code.component_count();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (flat_linking_diff(code, catalog, a, b) != 0) return std::nullopt;
    }
  }
  Filamentation f;
  for (std::size_t a = 0; a < n; ++a) {
    auto part = component_filamentation(code, a);
    if (!part) return std::nullopt;
    f.append(*part);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      auto zero_sum = greedy_zero_sum_partition(code, a, b);
      if (!zero_sum) return std::nullopt;
      for (const auto& p : zero_sum->pairing.pairs) f.bi.emplace_back(p.plus_on_first, p.minus_on_first);
    }
  }
  return f;
}

namespace {

struct OracleSearch {
  const std::vector<CrossingInfo>& crossings;
  std::vector<bool> mono_ok;
  std::vector<std::vector<bool>> pair_ok;
  std::vector<bool> used;
  Filamentation current;

  bool run() {
    std::size_t i = 0;
    while (i < used.size() && used[i]) ++i;
    if (i == used.size()) return true;
    used[i] = true;
    if (mono_ok[i]) {
      current.mono.push_back(crossings[i].id);
      if (run()) return true;
      current.mono.pop_back();
    }
    for (std::size_t j = i + 1; j < used.size(); ++j) {
      if (used[j] || !pair_ok[i][j]) continue;
      used[j] = true;
      current.bi.emplace_back(crossings[i].id, crossings[j].id);
      if (run()) return true;
      current.bi.pop_back();
      used[j] = false;
    }
    used[i] = false;
    return false;
  }
};

}  // namespace

std::optional<Filamentation> brute_force_filamentation(const FlatLinkCode& code, std::size_t max_crossings) {
  const CrossingCatalog catalog = validate(code);
  const std::size_t n = catalog.crossings.size();
  if (n > max_crossings) {
    throw Error(ErrorCode::InstanceTooLarge, std::to_string(n),
                "oracle cap is " + std::to_string(max_crossings) + " crossings");
  }
  OracleSearch search{catalog.crossings, std::vector<bool>(n), std::vector<std::vector<bool>>(n, std::vector<bool>(n)),
                      std::vector<bool>(n), {}};
  for (std::size_t i = 0; i < n; ++i) {
    const CrossingInfo& x = catalog.crossings[i];
    search.mono_ok[i] = x.is_self() && self_eta(code, x) == 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const CrossingInfo& y = catalog.crossings[j];
      search.pair_ok[i][j] = structurally_pairable(x, y) && pair_eta_sum(code, catalog, x.id, y.id) == 0;
    }
  }
  if (!search.run()) return std::nullopt;
  return search.current;
}

PairPartition elementary_switch(const PairPartition& p, std::size_t i, std::size_t j) {
  if (i >= p.pairs.size()) throw Error(ErrorCode::PairNotInPartition, std::to_string(i));
  if (j >= p.pairs.size()) throw Error(ErrorCode::PairNotInPartition, std::to_string(j));
  if (i == j) throw Error(ErrorCode::PairNotInPartition, std::to_string(i), "switch needs two different pairs");
  PairPartition out = p;
  std::swap(out.pairs[i].minus_on_first, out.pairs[j].minus_on_first);
  return out;
}

PairPartition elementary_switch(const PairPartition& p, const CrossingPair& first, const CrossingPair& second) {
  auto locate = [&](const CrossingPair& pair) {
    auto it = std::find(p.pairs.begin(), p.pairs.end(), pair);
    if (it == p.pairs.end()) {
      throw Error(ErrorCode::PairNotInPartition, pair.plus_on_first + "," + pair.minus_on_first);
    }
    return static_cast<std::size_t>(it - p.pairs.begin());
  };
  return elementary_switch(p, locate(first), locate(second));
}

std::optional<ZeroSumPartition> exchange_into(const FlatLinkCode& code, const ZeroSumPartition& p,
                                              const CrossingPair& target) {
  const auto& pairs = p.pairing.pairs;
  auto with_x = std::find_if(pairs.begin(), pairs.end(),
                             [&](const CrossingPair& q) { return q.plus_on_first == target.plus_on_first; });
  auto with_y = std::find_if(pairs.begin(), pairs.end(),
                             [&](const CrossingPair& q) { return q.minus_on_first == target.minus_on_first; });
  if (with_x == pairs.end()) throw Error(ErrorCode::PairNotInPartition, target.plus_on_first);
  if (with_y == pairs.end()) throw Error(ErrorCode::PairNotInPartition, target.minus_on_first);
  if (with_x == with_y) return p;
  ZeroSumPartition out{elementary_switch(p.pairing, static_cast<std::size_t>(with_x - pairs.begin()),
                                         static_cast<std::size_t>(with_y - pairs.begin()))};
  if (!is_zero_sum(code, validate(code), out.pairing)) return std::nullopt;
  return out;
}

}  // namespace flatlink
