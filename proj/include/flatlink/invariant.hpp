#pragma once

// The polynomial invariant of a flat virtual link: one polynomial in t_A per
// component plus one linear coefficient of t_{A,B} per unordered pair.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flatlink/gauss_code.hpp"

namespace flatlink {

// Integer polynomial without constant term. Zero coefficients are never stored.
class SparsePoly {
 public:
  using Terms = std::map<int, std::int64_t>;

  SparsePoly() = default;
  explicit SparsePoly(Terms terms);

  void add_term(int exponent, std::int64_t coeff);
  std::int64_t coeff(int exponent) const;
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // "2t - 2t^2", or "0".
  std::string to_string(const std::string& variable = "t") const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  Terms terms_;
};

// Names of an unordered component pair, smaller name first.
using NamePair = std::pair<std::string, std::string>;
NamePair make_name_pair(const std::string& a, const std::string& b);

struct LinkInvariant {
  std::map<std::string, SparsePoly> component_polys;
  // Present only for pairs where the pairwise term is defined: zero linking
  // difference for the pair and zero total sign on both components.
  std::map<NamePair, std::int64_t> pair_coeffs;
  // (#plus - #minus) of the pair's crossing ends on the smaller-named component.
  std::map<NamePair, std::int64_t> linking_diffs;

  bool is_zero() const;

  friend bool operator==(const LinkInvariant&, const LinkInvariant&) = default;
};

struct CrossingPair {
  std::string plus_on_first;   // x: its + end lies on `first`
  std::string minus_on_first;  // y: its - end lies on `first`

  friend bool operator==(const CrossingPair&, const CrossingPair&) = default;
};

// A pairing of the crossings between components `first` and `second`.
struct PairPartition {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<CrossingPair> pairs;

  bool contains(const CrossingPair& p) const;
};

int flat_linking_diff(const FlatLinkCode& code, std::size_t a, std::size_t b);
int flat_linking_diff(const FlatLinkCode& code, const CrossingCatalog& catalog, std::size_t a, std::size_t b);

SparsePoly self_polynomial(const FlatLinkCode& code, std::size_t component);
SparsePoly self_polynomial(const FlatLinkCode& code, const CrossingCatalog& catalog, std::size_t component);

// First fit in position order on `a`: the i-th + end of an ab-crossing on `a`
// is paired with the i-th - end.
PairPartition choose_pair_partition(const FlatLinkCode& code, std::size_t a, std::size_t b);
PairPartition choose_pair_partition(const FlatLinkCode& code, const CrossingCatalog& catalog,
                                    std::size_t a, std::size_t b);

// eta_A(x+, y-) + eta_B(y+, x-) for one pair, where x+ and y- lie on the same
// component. Works for self-crossing pairs too (A == B).
int pair_eta_sum(const FlatLinkCode& code, const CrossingCatalog& catalog, const std::string& x,
                 const std::string& y);

// Throws InvalidPartition unless `partition` pairs up exactly the crossings
// between its two components with the + / - convention respected.
void check_partition(const CrossingCatalog& catalog, const PairPartition& partition);

std::int64_t pair_coefficient(const FlatLinkCode& code, std::size_t a, std::size_t b,
                              const PairPartition& partition);

LinkInvariant link_polynomial(const FlatLinkCode& code);

bool invariants_equal(const LinkInvariant& lhs, const LinkInvariant& rhs, bool up_to_component_bijection);

std::string to_text(const LinkInvariant& inv);

}  // namespace flatlink
