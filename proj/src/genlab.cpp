#include "flatlink/genlab.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "flatlink/error.hpp"
#include "flatlink/filament.hpp"
#include "flatlink/invariant.hpp"

namespace flatlink {

FlatLinkCode random_flat_link(const GenSpec& spec) {
  const std::size_t k = spec.components;
  if (spec.self_crossings.size() > k) {
    throw Error(ErrorCode::InfeasibleSpec, std::to_string(spec.self_crossings.size()),
                "more self-crossing counts than components");
  }
  for (const auto& [pair, count] : spec.pair_crossings) {
    if (pair.first >= pair.second || pair.second >= k) {
      throw Error(ErrorCode::InfeasibleSpec, std::to_string(pair.first) + "," + std::to_string(pair.second),
                  "pair keys must be (a, b) with a < b < components");
    }
    if (spec.balanced && count % 2 != 0) {
      throw Error(ErrorCode::InfeasibleSpec, std::to_string(pair.first) + "," + std::to_string(pair.second),
                  "a balanced pair needs an even number of crossings");
    }
  }

  std::mt19937_64 rng(spec.seed);
  FlatLinkCode code;
  for (std::size_t c = 0; c < k; ++c) code.components.push_back({default_component_name(c), {}});
  std::size_t next_id = 1;
  auto place = [&](std::size_t plus_comp, std::size_t minus_comp) {
    const std::string id = std::to_string(next_id++);
    code.components[plus_comp].letters.push_back({id, Sign::Plus});
    code.components[minus_comp].letters.push_back({id, Sign::Minus});
  };
  for (std::size_t c = 0; c < spec.self_crossings.size(); ++c) {
    for (std::size_t i = 0; i < spec.self_crossings[c]; ++i) place(c, c);
  }
  for (const auto& [pair, count] : spec.pair_crossings) {
    for (std::size_t i = 0; i < count; ++i) {
      const bool plus_on_first = spec.balanced ? i % 2 == 0 : (rng() & 1) == 0;
      if (plus_on_first) {
        place(pair.first, pair.second);
      } else {
        place(pair.second, pair.first);
      }
    }
  }
  for (auto& word : code.components) {
    auto& v = word.letters;
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
  }
  return code;
}

namespace {

struct RawGenerator {
  std::size_t crossings;
  const std::function<bool(const FlatLinkCode&)>& visit;
  std::vector<std::size_t> lengths;
  std::vector<int> sequence;  // 2 * label + (sign == Minus)
  std::vector<int> open;      // labels with one letter placed, holding that letter's sign bit
  std::vector<int> open_sign;
  bool stopped = false;

  FlatLinkCode build() const {
    FlatLinkCode code;
    std::size_t at = 0;
    for (std::size_t c = 0; c < lengths.size(); ++c) {
      Codeword word{default_component_name(c), {}};
      for (std::size_t j = 0; j < lengths[c]; ++j, ++at) {
        const int enc = sequence[at];
        word.letters.push_back({crossing_label(static_cast<std::size_t>(enc / 2)), enc % 2 ? Sign::Minus : Sign::Plus});
      }
      code.components.push_back(std::move(word));
    }
    return code;
  }

  void fill(std::size_t next_label) {
    if (stopped) return;
    const std::size_t total = 2 * crossings;
    const std::size_t pos = sequence.size();
    if (pos == total) {
      if (!visit(build())) stopped = true;
      return;
    }
    const std::size_t remaining = total - pos;
    if (next_label < crossings && remaining >= open.size() + 2) {
      for (int bit : {0, 1}) {
        sequence.push_back(2 * static_cast<int>(next_label) + bit);
        open.push_back(static_cast<int>(next_label));
        open_sign.push_back(bit);
        fill(next_label + 1);
        open.pop_back();
        open_sign.pop_back();
        sequence.pop_back();
        if (stopped) return;
      }
    }
    for (std::size_t i = 0; i < open.size(); ++i) {
      const int label = open[i];
      const int bit = open_sign[i];
      sequence.push_back(2 * label + (1 - bit));
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
      open_sign.erase(open_sign.begin() + static_cast<std::ptrdiff_t>(i));
      fill(next_label);
      open.insert(open.begin() + static_cast<std::ptrdiff_t>(i), label);
      open_sign.insert(open_sign.begin() + static_cast<std::ptrdiff_t>(i), bit);
      sequence.pop_back();
      if (stopped) return;
    }
  }

  void compositions(std::size_t index, std::size_t left) {
    if (stopped) return;
    if (index + 1 == lengths.size()) {
      lengths[index] = left;
      fill(0);
      return;
    }
    for (std::size_t len = 0; len <= left; ++len) {
      lengths[index] = len;
      compositions(index + 1, left - len);
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_raw_code(std::size_t crossings, std::size_t components,
                       const std::function<bool(const FlatLinkCode&)>& visit) {
  if (components == 0) {
    if (crossings == 0) visit(FlatLinkCode{});
    return;
  }
  RawGenerator gen{crossings, visit, std::vector<std::size_t>(components), {}, {}, {}};
  gen.compositions(0, 2 * crossings);
}

std::vector<FlatLinkCode> enumerate_small_codes(std::size_t crossings, std::size_t components, std::size_t cap) {
  if (crossings > cap) {
    throw Error(ErrorCode::InstanceTooLarge, std::to_string(crossings),
                "enumeration cap is " + std::to_string(cap) + " crossings");
  }
  std::set<CanonicalKey> classes;
  for_each_raw_code(crossings, components, [&](const FlatLinkCode& code) {
    classes.insert(canonical_key(code));
    return true;
  });
  std::vector<FlatLinkCode> out;
  out.reserve(classes.size());
  for (const auto& key : classes) out.push_back(code_from_key(key));
  return out;
}

std::string_view to_string(SearchGoal goal) {
  return goal == SearchGoal::ZeroPolyNoFilamentation ? "zero-poly-no-filamentation" : "nonzero-multi-component";
}

SearchGoal parse_search_goal(std::string_view text) {
  if (text == "zero-poly-no-filamentation" || text == "ZeroPolyNoFilamentation") {
    return SearchGoal::ZeroPolyNoFilamentation;
  }
  if (text == "nonzero-multi-component" || text == "NonzeroMultiComponent") return SearchGoal::NonzeroMultiComponent;
  throw Error(ErrorCode::MalformedToken, std::string(text), "unknown search goal");
}

bool is_witness(SearchGoal goal, const FlatLinkCode& code) {
  const LinkInvariant inv = link_polynomial(code);
  if (goal == SearchGoal::ZeroPolyNoFilamentation) {
    if (code.component_count() < 2 || !inv.is_zero()) return false;
    return !brute_force_filamentation(code).has_value();
  }
  if (code.component_count() < 3) return false;
  for (const auto& w : code.components) {
    if (w.empty()) return false;
  }
  for (const auto& kv : inv.linking_diffs) {
    if (kv.second != 0) return false;
  }
  return std::any_of(inv.pair_coeffs.begin(), inv.pair_coeffs.end(), [](const auto& kv) { return kv.second != 0; });
}

namespace {

// Index and code of the first witness in one (crossings, components) stage.
std::optional<FlatLinkCode> search_stage(SearchGoal goal, std::size_t crossings, std::size_t components,
                                         std::size_t jobs) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  std::mutex mu;
  std::optional<FlatLinkCode> witness;

  auto worker = [&](std::size_t id) {
    std::size_t index = 0;
    for_each_raw_code(crossings, components, [&](const FlatLinkCode& code) {
      const std::size_t mine = index++;
      if (mine >= best.load()) return false;
      if (mine % jobs != id) return true;
      if (!is_witness(goal, code)) return true;
      std::lock_guard lock(mu);
      if (mine < best.load()) {
        best = mine;
        witness = code;
      }
      return false;
    });
  };

  if (jobs <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }
  return witness;
}

}  // namespace

std::optional<FlatLinkCode> search_examples(SearchGoal goal, const SearchLimits& limits) {
  if (limits.max_crossings > kOracleCrossingCap) {
    throw Error(ErrorCode::InstanceTooLarge, std::to_string(limits.max_crossings),
                "search is bounded by the oracle cap of " + std::to_string(kOracleCrossingCap) + " crossings");
  }
  const std::size_t min_components = goal == SearchGoal::ZeroPolyNoFilamentation ? 2 : 3;
  const std::size_t jobs = std::max<std::size_t>(1, limits.jobs);
  for (std::size_t n = 1; n <= limits.max_crossings; ++n) {
    for (std::size_t k = min_components; k <= limits.max_components; ++k) {
      if (auto w = search_stage(goal, n, k, jobs)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace flatlink
