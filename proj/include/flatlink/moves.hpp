#pragma once

// Flat Reidemeister moves on Gauss codes.
//
//   R1  a curl: letters e+ e- (either order) adjacent on one codeword.
//   R2  two strands crossing twice: e^s f^-s adjacent at one place and
//       e^-s f^s or f^s e^-s adjacent at another (same or other codeword).
//   R3  cyclic triangle: adjacent pairs (a+ c-), (b+ a-), (c+ b-). The move
//       reverses each pair in place; the result is the mirrored pattern
//       (c- a+), (a- b+), (b- c+), which is itself an R3 site.
//
// Move log lines have the form `<kind> <components> <positions> <payload>`
// with comma-separated lists. Inserts carry the inserted letters (R2Insert
// separates its two slots with '/'); removes and R3 carry crossing names.

#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "flatlink/gauss_code.hpp"

namespace flatlink {

enum class MoveKind { R1Insert, R1Remove, R2Insert, R2Remove, R3 };

inline constexpr std::array<MoveKind, 5> kAllMoveKinds = {MoveKind::R1Insert, MoveKind::R1Remove, MoveKind::R2Insert,
                                                           MoveKind::R2Remove, MoveKind::R3};

std::string_view to_string(MoveKind kind);
MoveKind parse_move_kind(std::string_view text);

struct MoveSite {
  MoveKind kind = MoveKind::R1Insert;
  // One entry per slot. Inserts: slot = insertion index (0..len) on the
  // component, letters go before the letter currently there. Removes / R3:
  // slot = index of the first letter of the adjacent pair.
  std::vector<std::size_t> components;
  std::vector<std::size_t> positions;
  // Inserts only: two letters per slot, in reading order.
  std::vector<Letter> letters;
  // Removes and R3: the crossings involved (R3 in the order a, b, c).
  std::vector<std::string> crossings;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

std::string to_log_line(const MoveSite& site);
MoveSite parse_log_line(std::string_view line);

// Smallest unused identifiers of the form _1, _2, ...
std::vector<std::string> fresh_crossing_ids(const FlatLinkCode& code, std::size_t count);

std::vector<MoveSite> find_move_sites(const FlatLinkCode& code, const std::set<MoveKind>& kinds);
std::vector<MoveSite> find_move_sites(const FlatLinkCode& code, MoveKind kind);

// Re-verifies the site against the code (StaleSite otherwise) and applies it.
FlatLinkCode apply_move(const FlatLinkCode& code, const MoveSite& site);

struct MovePolicy {
  // Relative weights, indexed like kAllMoveKinds.
  std::array<double, 5> weights{1.0, 1.0, 1.0, 1.0, 1.0};

  // "R1Insert=2,R3=5": unnamed kinds keep weight 1.
  static MovePolicy parse(std::string_view text);
};

struct WalkResult {
  FlatLinkCode code;
  std::vector<MoveSite> log;
};

// Applies `steps` random moves. Each step draws a kind by weight among the kinds
// that currently have sites, then a site uniformly. Deterministic in the seed.
WalkResult random_walk(const FlatLinkCode& code, std::size_t steps, std::uint64_t seed,
                       const MovePolicy& policy = {});

}  // namespace flatlink
