#include "flatlink/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "flatlink/error.hpp"

namespace flatlink {

namespace {

bool is_identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_identifier(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_identifier_char);
}

Letter parse_letter(std::string_view token) {
  if (token.size() < 2) throw Error(ErrorCode::MalformedToken, std::string(token), "expected <identifier><sign>");
  const char sign = token.back();
  const std::string_view id = token.substr(0, token.size() - 1);
  if ((sign != '+' && sign != '-') || !is_identifier(id)) {
    throw Error(ErrorCode::MalformedToken, std::string(token), "expected <identifier><sign>");
  }
  return Letter{std::string(id), sign == '+' ? Sign::Plus : Sign::Minus};
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; });
}

// Parses one ';'-delimited segment. The name is empty when none was given.
Codeword parse_segment(std::string_view segment) {
  Codeword word;
  auto tokens = split_whitespace(segment);
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    std::string_view token = tokens[t];
    if (t == 0) {
      if (auto colon = token.find(':'); colon != std::string_view::npos) {
        const std::string_view name = token.substr(0, colon);
        if (!is_identifier(name)) throw Error(ErrorCode::MalformedToken, std::string(token), "bad component name");
        word.name = std::string(name);
        token = token.substr(colon + 1);
        if (token.empty()) continue;
      }
    }
    word.letters.push_back(parse_letter(token));
  }
  return word;
}

void check_unique_names(const FlatLinkCode& code) {
  std::set<std::string_view> seen;
  for (const auto& c : code.components) {
    if (!seen.insert(c.name).second) throw Error(ErrorCode::DuplicateComponentName, c.name);
  }
}

}  // namespace

std::string to_string(const Letter& letter) { return letter.crossing + symbol(letter.sign); }

std::size_t FlatLinkCode::letter_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : components) n += c.size();
  return n;
}

std::optional<std::size_t> FlatLinkCode::find_component(std::string_view name) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].name == name) return i;
  }
  return std::nullopt;
}

std::string default_component_name(std::size_t index) {
  std::string name;
  std::size_t n = index + 1;
  while (n > 0) {
    --n;
    name.insert(name.begin(), static_cast<char>('A' + n % 26));
    n /= 26;
  }
  return name;
}

FlatLinkCode parse_flat_link(std::string_view text) {
  FlatLinkCode code;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!is_blank(line)) {
      std::size_t seg_start = 0;
      while (true) {
        std::size_t seg_end = line.find(';', seg_start);
        const bool last = seg_end == std::string_view::npos;
        if (last) seg_end = line.size();
        code.components.push_back(parse_segment(line.substr(seg_start, seg_end - seg_start)));
        if (last) break;
        seg_start = seg_end + 1;
      }
    }
    line_start = line_end + 1;
  }
  for (std::size_t i = 0; i < code.components.size(); ++i) {
    if (code.components[i].name.empty()) code.components[i].name = default_component_name(i);
  }
  check_unique_names(code);
  return code;
}

std::string render_flat_link(const FlatLinkCode& code) {
  std::ostringstream out;
  for (std::size_t i = 0; i < code.components.size(); ++i) {
    const Codeword& word = code.components[i];
    if (i > 0) out << " ; ";
    const bool named = word.empty() || word.name != default_component_name(i);
    if (named) out << word.name << ':';
    for (std::size_t j = 0; j < word.size(); ++j) {
      if (j > 0 || named) out << ' ';
      out << to_string(word.letters[j]);
    }
  }
  return out.str();
}

const CrossingInfo& CrossingCatalog::at(std::string_view id) const {
  auto it = index.find(id);
  if (it == index.end()) throw Error(ErrorCode::InvalidPartition, std::string(id), "unknown crossing");
  return crossings[it->second];
}

const std::vector<std::size_t>& CrossingCatalog::crossings_between(std::size_t a, std::size_t b) const {
  static const std::vector<std::size_t> none;
  auto it = pair_crossings.find({std::min(a, b), std::max(a, b)});
  return it == pair_crossings.end() ? none : it->second;
}

CrossingCatalog validate(const FlatLinkCode& code) {
  check_unique_names(code);

  struct Seen {
    std::vector<LetterRef> refs;
    std::vector<Sign> signs;
  };
  std::vector<std::string> order;
  std::map<std::string, Seen, std::less<>> seen;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    const auto& letters = code.components[c].letters;
    for (std::size_t p = 0; p < letters.size(); ++p) {
      auto [it, inserted] = seen.try_emplace(letters[p].crossing);
      if (inserted) order.push_back(letters[p].crossing);
      it->second.refs.push_back({c, p});
      it->second.signs.push_back(letters[p].sign);
    }
  }

  CrossingCatalog catalog;
  catalog.self_crossings.resize(code.components.size());
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    for (std::size_t d = c + 1; d < code.components.size(); ++d) catalog.pair_crossings[{c, d}];
  }
  for (const auto& id : order) {
    const Seen& s = seen.find(id)->second;
    if (s.refs.size() == 1) throw Error(ErrorCode::CrossingAppearsOnce, id);
    if (s.refs.size() > 2) throw Error(ErrorCode::CrossingAppearsThrice, id);
    if (s.signs[0] == s.signs[1]) throw Error(ErrorCode::SameSignTwice, id);
    CrossingInfo info{id, s.refs[0], s.refs[1]};
    if (s.signs[0] == Sign::Minus) std::swap(info.plus, info.minus);
    const std::size_t idx = catalog.crossings.size();
    catalog.index.emplace(id, idx);
    if (info.is_self()) {
      catalog.self_crossings[info.plus.component].push_back(idx);
    } else {
      const auto a = std::min(info.plus.component, info.minus.component);
      const auto b = std::max(info.plus.component, info.minus.component);
      catalog.pair_crossings[{a, b}].push_back(idx);
    }
    catalog.crossings.push_back(std::move(info));
  }
  return catalog;
}

int total_sign(const FlatLinkCode& code, std::size_t component) {
  if (component >= code.components.size()) {
    throw Error(ErrorCode::ComponentOutOfRange, std::to_string(component));
  }
  int sum = 0;
  for (const auto& l : code.components[component].letters) sum += value(l.sign);
  return sum;
}

int eta(const Codeword& word, std::size_t from, std::size_t to) {
  const std::size_t n = word.size();
  if (from >= n || to >= n) {
    throw Error(ErrorCode::PositionOutOfRange, word.name,
                "positions " + std::to_string(from) + "," + std::to_string(to) + " of " + std::to_string(n));
  }
  if (from == to) throw Error(ErrorCode::SamePosition, word.name, "position " + std::to_string(from));
  int sum = 0;
  for (std::size_t i = (from + 1) % n; i != to; i = (i + 1) % n) sum += value(word.letters[i].sign);
  return sum;
}

int eta(const FlatLinkCode& code, std::size_t component, std::size_t from, std::size_t to) {
  if (component >= code.components.size()) {
    throw Error(ErrorCode::ComponentOutOfRange, std::to_string(component));
  }
  return eta(code.components[component], from, to);
}

namespace {

bool rotation_equal(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (std::size_t r = 0; r < n; ++r) {
    bool match = true;
    for (std::size_t j = 0; j < n && match; ++j) match = a[(r + j) % n] == b[j];
    if (match) return true;
  }
  return false;
}

// Crossing identifiers mapped to dense integers, shared by canonicalization.
std::vector<std::vector<std::pair<int, Sign>>> densify(const FlatLinkCode& code, std::size_t& distinct) {
  std::map<std::string_view, int> ids;
  std::vector<std::vector<std::pair<int, Sign>>> out;
  for (const auto& word : code.components) {
    auto& dense = out.emplace_back();
    for (const auto& l : word.letters) {
      auto [it, inserted] = ids.try_emplace(l.crossing, static_cast<int>(ids.size()));
      dense.emplace_back(it->second, l.sign);
    }
  }
  distinct = ids.size();
  return out;
}

}  // namespace

CanonicalKey canonical_key(const FlatLinkCode& code) {
  std::size_t distinct = 0;
  const auto dense = densify(code, distinct);
  const std::size_t k = dense.size();

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<CanonicalKey> best;
  CanonicalKey candidate(k);
  std::vector<int> label(distinct);

  do {
    std::vector<std::size_t> rot(k, 0);
    while (true) {
      std::fill(label.begin(), label.end(), -1);
      int next = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const auto& word = dense[perm[i]];
        auto& enc = candidate[i];
        enc.clear();
        for (std::size_t j = 0; j < word.size(); ++j) {
          const auto& [id, sign] = word[(rot[i] + j) % word.size()];
          if (label[id] < 0) label[id] = next++;
          enc.push_back(2 * label[id] + (sign == Sign::Minus ? 1 : 0));
        }
      }
      if (!best || candidate < *best) best = candidate;

      std::size_t i = 0;
      for (; i < k; ++i) {
        const std::size_t len = dense[perm[i]].size();
        if (len > 0 && ++rot[i] < len) break;
        rot[i] = 0;
      }
      if (i == k) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return best.value_or(CanonicalKey{});
}

std::string crossing_label(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "x" + std::to_string(index + 1);
}

FlatLinkCode code_from_key(const CanonicalKey& key) {
  FlatLinkCode code;
  for (std::size_t i = 0; i < key.size(); ++i) {
    Codeword word{default_component_name(i), {}};
    for (int enc : key[i]) {
      word.letters.push_back({crossing_label(static_cast<std::size_t>(enc / 2)),
                              enc % 2 == 0 ? Sign::Plus : Sign::Minus});
    }
    code.components.push_back(std::move(word));
  }
  return code;
}

bool codes_equivalent_syntactically(const FlatLinkCode& lhs, const FlatLinkCode& rhs, bool allow_relabel) {
  if (lhs.component_count() != rhs.component_count()) return false;
  if (!allow_relabel) {
    for (std::size_t i = 0; i < lhs.components.size(); ++i) {
      const auto& a = lhs.components[i];
      const auto& b = rhs.components[i];
      if (a.name != b.name || !rotation_equal(a.letters, b.letters)) return false;
    }
    return true;
  }
  std::vector<std::size_t> la, lb;
  for (const auto& c : lhs.components) la.push_back(c.size());
  for (const auto& c : rhs.components) lb.push_back(c.size());
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) return false;
  return canonical_key(lhs) == canonical_key(rhs);
}

}  // namespace flatlink
