#pragma once

// Filamentations: partitions of the crossings into monofilaments and
// bifilaments whose eta conditions vanish. Construction per component,
// zero-sum pairings between components, and an exhaustive oracle.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flatlink/gauss_code.hpp"
#include "flatlink/invariant.hpp"

namespace flatlink {

struct Filamentation {
  std::vector<std::string> mono;
  std::vector<std::pair<std::string, std::string>> bi;

  // Sorted parts, each bifilament with its smaller identifier first.
  Filamentation normalized() const;
  void append(const Filamentation& other);
};

// A pairing of the crossings between two components in which every pair has
// eta-sum zero.
struct ZeroSumPartition {
  PairPartition pairing;
};

struct FilamentViolation {
  enum class Kind { NonzeroEta, Structural };
  Kind kind;
  std::vector<std::string> part;
  int eta = 0;
  std::string message;
};

// Returns the parts that break the filamentation conditions. Throws
// PartitionNotCovering / PartsOverlap when `f` is not a partition of the
// crossings at all.
std::vector<FilamentViolation> verify_filamentation(const FlatLinkCode& code, const Filamentation& f);

// Monofilaments are the self-chords with eta 0; chords with eta n are paired
// in position order with chords of eta -n. Requires zero total sign.
std::optional<Filamentation> component_filamentation(const FlatLinkCode& code, std::size_t component);

bool is_zero_sum(const FlatLinkCode& code, const CrossingCatalog& catalog, const PairPartition& p);

std::optional<ZeroSumPartition> greedy_zero_sum_partition(const FlatLinkCode& code, std::size_t a, std::size_t b);

std::optional<Filamentation> link_filamentation(const FlatLinkCode& code);

inline constexpr std::size_t kOracleCrossingCap = 12;

std::optional<Filamentation> brute_force_filamentation(const FlatLinkCode& code,
                                                       std::size_t max_crossings = kOracleCrossingCap);

// Replaces {x,z} (pairs[i]) and {w,y} (pairs[j]) by {x,y} and {w,z}: the two
// pairs exchange their crossings whose - end lies on the first component.
PairPartition elementary_switch(const PairPartition& p, std::size_t i, std::size_t j);
PairPartition elementary_switch(const PairPartition& p, const CrossingPair& first, const CrossingPair& second);

// Given a zero-sum partition and a zero-sum pair {x,y} not in it, performs the
// switch that brings {x,y} into the partition. The result is re-checked; an
// empty optional means the exchange did not yield a zero-sum partition.
std::optional<ZeroSumPartition> exchange_into(const FlatLinkCode& code, const ZeroSumPartition& p,
                                              const CrossingPair& target);

}  // namespace flatlink
