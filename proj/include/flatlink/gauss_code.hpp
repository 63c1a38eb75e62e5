#pragma once

// Gauss-code data model for flat virtual links: signed crossing letters,
// cyclic codewords (one per link component), the text format, validation into
// a crossing catalog, and the signed arc count eta.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flatlink {

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}
constexpr int value(Sign s) noexcept { return static_cast<int>(s); }
constexpr char symbol(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

struct Letter {
  std::string crossing;
  Sign sign = Sign::Plus;

  friend bool operator==(const Letter&, const Letter&) = default;
};

std::string to_string(const Letter& letter);

// A cyclic word. Index 0 is a representation artifact; operations that carry
// meaning treat positions modulo letters.size().
struct Codeword {
  std::string name;
  std::vector<Letter> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  const Letter& at_cyclic(std::size_t i) const { return letters[i % letters.size()]; }

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

struct FlatLinkCode {
  std::vector<Codeword> components;

  std::size_t component_count() const noexcept { return components.size(); }
  std::size_t letter_count() const noexcept;
  std::optional<std::size_t> find_component(std::string_view name) const;

  friend bool operator==(const FlatLinkCode&, const FlatLinkCode&) = default;
};

// Name given to an unnamed component at `index`: A, B, ..., Z, AA, AB, ...
std::string default_component_name(std::size_t index);

// Text format: components separated by ';' or line breaks, whitespace
// separated `<identifier><sign>` tokens, optional leading `name:` token,
// '#' comments. Blank lines are skipped; an empty ';' segment is an empty
// component. Does not check crossing pairing (see validate).
FlatLinkCode parse_flat_link(std::string_view text);

// Exact inverse of parse_flat_link at rotation 0. Names are written only when
// they differ from the positional default or the codeword is empty.
std::string render_flat_link(const FlatLinkCode& code);

struct LetterRef {
  std::size_t component = 0;
  std::size_t position = 0;

  friend bool operator==(const LetterRef&, const LetterRef&) = default;
};

struct CrossingInfo {
  std::string id;
  LetterRef plus;
  LetterRef minus;

  bool is_self() const noexcept { return plus.component == minus.component; }
  // The component carrying `component`'s partner letter, for pair crossings.
  LetterRef end_on(std::size_t component) const {
    return plus.component == component ? plus : minus;
  }
};

using ComponentPair = std::pair<std::size_t, std::size_t>;

// Classification of every crossing of a validated code. Crossings are listed in
// order of first appearance (component order, then position).
struct CrossingCatalog {
  std::vector<CrossingInfo> crossings;
  std::map<std::string, std::size_t, std::less<>> index;
  // self_crossings[A] lists catalog indices of K(A), ordered by position of the
  // first letter on A.
  std::vector<std::vector<std::size_t>> self_crossings;
  // Keyed by (A, B) with A < B.
  std::map<ComponentPair, std::vector<std::size_t>> pair_crossings;

  const CrossingInfo& at(std::string_view id) const;
  bool contains(std::string_view id) const { return index.find(id) != index.end(); }
  const std::vector<std::size_t>& crossings_between(std::size_t a, std::size_t b) const;
};

CrossingCatalog validate(const FlatLinkCode& code);

int total_sign(const FlatLinkCode& code, std::size_t component);

// (#plus - #minus) over the letters strictly between `from` and `to`, walking
// forward cyclically along the component.
int eta(const FlatLinkCode& code, std::size_t component, std::size_t from, std::size_t to);
int eta(const Codeword& word, std::size_t from, std::size_t to);

// Equality up to rotation of each codeword. Without relabeling, component i is
// compared with component i and names must agree; with relabeling, crossings
// and components may be renamed bijectively (component order is then free).
bool codes_equivalent_syntactically(const FlatLinkCode& lhs, const FlatLinkCode& rhs,
                                    bool allow_relabel);

// Lexicographically least encoding over component permutations, rotations and
// crossing relabelings. Letters are encoded as 2 * label + (sign == Minus),
// labels numbered by first appearance.
using CanonicalKey = std::vector<std::vector<int>>;
CanonicalKey canonical_key(const FlatLinkCode& code);

// The representative code of a canonical key: crossings a, b, c, ... and
// default component names.
FlatLinkCode code_from_key(const CanonicalKey& key);
std::string crossing_label(std::size_t index);

}  // namespace flatlink
