#include "flatlink/moves.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>
#include <tuple>

#include "flatlink/error.hpp"

namespace flatlink {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Insert: return "R1Insert";
    case MoveKind::R1Remove: return "R1Remove";
    case MoveKind::R2Insert: return "R2Insert";
    case MoveKind::R2Remove: return "R2Remove";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

MoveKind parse_move_kind(std::string_view text) {
  for (MoveKind k : kAllMoveKinds) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorCode::MalformedMoveLog, std::string(text), "unknown move kind");
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    out.push_back(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::size_t> parse_indices(std::string_view field) {
  std::vector<std::size_t> out;
  for (auto part : split(field, ',')) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw Error(ErrorCode::MalformedMoveLog, std::string(field), "expected comma-separated indices");
    }
    out.push_back(v);
  }
  return out;
}

template <typename T>
std::string join(const std::vector<T>& items, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out << sep;
    if constexpr (std::is_same_v<T, Letter>) {
      out << to_string(items[i]);
    } else {
      out << items[i];
    }
  }
  return out.str();
}

bool is_insert(MoveKind k) { return k == MoveKind::R1Insert || k == MoveKind::R2Insert; }

std::size_t slot_count(MoveKind k) {
  switch (k) {
    case MoveKind::R1Insert:
    case MoveKind::R1Remove: return 1;
    case MoveKind::R2Insert:
    case MoveKind::R2Remove: return 2;
    case MoveKind::R3: return 3;
  }
  return 0;
}

[[noreturn]] void stale(const MoveSite& site, const std::string& why) {
  throw Error(ErrorCode::StaleSite, to_log_line(site), why);
}

struct Slot {
  std::size_t component;
  std::size_t position;
};

// Insertion points: one per gap of every codeword, one for an empty codeword.
std::vector<Slot> insertion_slots(const FlatLinkCode& code) {
  std::vector<Slot> slots;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    const std::size_t n = code.components[c].size();
    if (n == 0) {
      slots.push_back({c, 0});
    } else {
      for (std::size_t p = 0; p < n; ++p) slots.push_back({c, p});
    }
  }
  return slots;
}

std::size_t insert_site_count(MoveKind kind, std::size_t slots) {
  if (kind == MoveKind::R1Insert) return 2 * slots;
  return 4 * (slots * (slots + 1) / 2);
}

// Site `index` in the fixed enumeration order of insert moves.
MoveSite insert_site_at(MoveKind kind, const std::vector<Slot>& slots, const std::vector<std::string>& fresh,
                        std::size_t index) {
  MoveSite site;
  site.kind = kind;
  if (kind == MoveKind::R1Insert) {
    const Slot& s = slots[index / 2];
    const Sign first = index % 2 == 0 ? Sign::Plus : Sign::Minus;
    site.components = {s.component};
    site.positions = {s.position};
    site.letters = {{fresh[0], first}, {fresh[0], -first}};
    return site;
  }
  std::size_t pair_index = index / 4;
  const Sign eps = (index / 2) % 2 == 0 ? Sign::Plus : Sign::Minus;
  const bool reversed = index % 2 == 1;
  std::size_t s1 = 0;
  while (pair_index >= slots.size() - s1) {
    pair_index -= slots.size() - s1;
    ++s1;
  }
  const std::size_t s2 = s1 + pair_index;
  const std::string& e = fresh[0];
  const std::string& f = fresh[1];
  site.components = {slots[s1].component, slots[s2].component};
  site.positions = {slots[s1].position, slots[s2].position};
  site.letters = {{e, eps}, {f, -eps}};
  if (reversed) {
    site.letters.push_back({f, eps});
    site.letters.push_back({e, -eps});
  } else {
    site.letters.push_back({e, -eps});
    site.letters.push_back({f, eps});
  }
  return site;
}

struct Locator {
  std::map<std::string, std::array<LetterRef, 2>, std::less<>> where;  // [plus, minus]

  explicit Locator(const CrossingCatalog& catalog) {
    for (const auto& x : catalog.crossings) where[x.id] = {x.plus, x.minus};
  }
  LetterRef of(const std::string& id, Sign s) const { return where.at(id)[s == Sign::Plus ? 0 : 1]; }
};

std::size_t next_pos(const FlatLinkCode& code, LetterRef r) { return (r.position + 1) % code.components[r.component].size(); }
std::size_t prev_pos(const FlatLinkCode& code, LetterRef r) {
  const std::size_t n = code.components[r.component].size();
  return (r.position + n - 1) % n;
}
const Letter& letter_at(const FlatLinkCode& code, std::size_t c, std::size_t p) { return code.components[c].letters[p]; }

std::vector<MoveSite> r1_remove_sites(const FlatLinkCode& code) {
  std::vector<MoveSite> sites;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    const auto& w = code.components[c];
    const std::size_t n = w.size();
    if (n < 2) continue;
    const std::size_t last = n == 2 ? 1 : n;
    for (std::size_t p = 0; p < last; ++p) {
      const Letter& a = w.letters[p];
      const Letter& b = w.letters[(p + 1) % n];
      if (a.crossing == b.crossing && a.sign != b.sign) {
        sites.push_back({MoveKind::R1Remove, {c}, {p}, {}, {a.crossing}});
      }
    }
  }
  return sites;
}

std::vector<MoveSite> r2_remove_sites(const FlatLinkCode& code, const Locator& loc) {
  std::vector<MoveSite> sites;
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    const std::size_t n = code.components[c].size();
    if (n < 2) continue;
    for (std::size_t p = 0; p < n; ++p) {
      const Letter& l1 = letter_at(code, c, p);
      const Letter& l2 = letter_at(code, c, (p + 1) % n);
      if (l1.crossing == l2.crossing || l1.sign == l2.sign) continue;
      const LetterRef other_e = loc.of(l1.crossing, -l1.sign);
      const LetterRef other_f = loc.of(l2.crossing, -l2.sign);
      if (other_e.component != other_f.component) continue;
      std::size_t start;
      if (next_pos(code, other_e) == other_f.position) {
        start = other_e.position;
      } else if (next_pos(code, other_f) == other_e.position) {
        start = other_f.position;
      } else {
        continue;
      }
      auto key = std::minmax(l1.crossing, l2.crossing);
      if (!seen.insert({key.first, key.second}).second) continue;
      sites.push_back({MoveKind::R2Remove, {c, other_e.component}, {p, start}, {}, {l1.crossing, l2.crossing}});
    }
  }
  return sites;
}

std::vector<MoveSite> r3_sites(const FlatLinkCode& code, const Locator& loc) {
  std::vector<MoveSite> sites;
  std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    const std::size_t n = code.components[c].size();
    if (n < 2) continue;
    for (std::size_t p = 0; p < n; ++p) {
      const Letter& l1 = letter_at(code, c, p);
      const Letter& l2 = letter_at(code, c, (p + 1) % n);
      if (l1.crossing == l2.crossing || l1.sign == l2.sign) continue;
      const bool forward = l1.sign == Sign::Plus;
      // Forward: (a+ c-), (b+ a-), (c+ b-). Mirrored: (c- a+), (a- b+), (b- c+).
      const std::string& a = forward ? l1.crossing : l2.crossing;
      const std::string& cc = forward ? l2.crossing : l1.crossing;
      const LetterRef a_minus = loc.of(a, Sign::Minus);
      const LetterRef c_plus = loc.of(cc, Sign::Plus);
      const std::size_t pair2 = forward ? prev_pos(code, a_minus) : a_minus.position;
      const Letter& b_plus = forward ? letter_at(code, a_minus.component, pair2)
                                     : letter_at(code, a_minus.component, next_pos(code, a_minus));
      if (b_plus.sign != Sign::Plus || b_plus.crossing == a || b_plus.crossing == cc) continue;
      const std::string& b = b_plus.crossing;
      const LetterRef b_minus = loc.of(b, Sign::Minus);
      std::size_t pair3;
      if (forward) {
        if (b_minus.component != c_plus.component || next_pos(code, c_plus) != b_minus.position) continue;
        pair3 = c_plus.position;
      } else {
        if (b_minus.component != c_plus.component || next_pos(code, b_minus) != c_plus.position) continue;
        pair3 = b_minus.position;
      }
      std::vector<std::pair<std::size_t, std::size_t>> key = {{c, p}, {a_minus.component, pair2}, {c_plus.component, pair3}};
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      sites.push_back({MoveKind::R3, {c, a_minus.component, c_plus.component}, {p, pair2, pair3}, {}, {a, b, cc}});
    }
  }
  return sites;
}

std::pair<const Letter*, const Letter*> pair_at(const FlatLinkCode& code, const MoveSite& site, std::size_t slot) {
  const std::size_t c = site.components[slot];
  const std::size_t n = code.components[c].size();
  const std::size_t p = site.positions[slot];
  if (n < 2 || p >= n) stale(site, "position out of range");
  return {&code.components[c].letters[p], &code.components[c].letters[(p + 1) % n]};
}

bool is_letter(const Letter* l, const std::string& id, Sign s) { return l->crossing == id && l->sign == s; }

void check_structure(const FlatLinkCode& code, const MoveSite& site) {
  const std::size_t slots = slot_count(site.kind);
  if (site.components.size() != slots || site.positions.size() != slots) stale(site, "wrong number of slots");
  for (std::size_t c : site.components) {
    if (c >= code.components.size()) stale(site, "component out of range");
  }
  if (is_insert(site.kind)) {
    if (site.letters.size() != 2 * slots) stale(site, "wrong number of inserted letters");
    for (std::size_t s = 0; s < slots; ++s) {
      if (site.positions[s] > code.components[site.components[s]].size()) stale(site, "position out of range");
    }
  } else {
    const std::size_t expected = site.kind == MoveKind::R1Remove ? 1 : site.kind == MoveKind::R2Remove ? 2 : 3;
    if (site.crossings.size() != expected) stale(site, "wrong number of crossings");
  }
}

void check_insert_letters(const FlatLinkCode& code, const MoveSite& site) {
  std::set<std::string> present;
  for (const auto& w : code.components) {
    for (const auto& l : w.letters) present.insert(l.crossing);
  }
  for (const auto& l : site.letters) {
    if (present.count(l.crossing)) stale(site, "crossing " + l.crossing + " already exists");
  }
  const auto& L = site.letters;
  if (site.kind == MoveKind::R1Insert) {
    if (L[0].crossing != L[1].crossing || L[0].sign == L[1].sign) stale(site, "R1 inserts e+ e- of one crossing");
    return;
  }
  const std::string& e = L[0].crossing;
  const std::string& f = L[1].crossing;
  const Sign eps = L[0].sign;
  if (e == f || L[1].sign != -eps) stale(site, "first strand must read e^s f^-s");
  const bool same = L[2] == Letter{e, -eps} && L[3] == Letter{f, eps};
  const bool reversed = L[2] == Letter{f, eps} && L[3] == Letter{e, -eps};
  if (!same && !reversed) stale(site, "second strand must read e^-s f^s or f^s e^-s");
}

void check_remove_or_r3(const FlatLinkCode& code, const MoveSite& site) {
  const auto& X = site.crossings;
  switch (site.kind) {
    case MoveKind::R1Remove: {
      auto [l1, l2] = pair_at(code, site, 0);
      if (l1->crossing != X[0] || l2->crossing != X[0] || l1->sign == l2->sign) stale(site, "no curl here");
      break;
    }
    case MoveKind::R2Remove: {
      auto [l1, l2] = pair_at(code, site, 0);
      auto [m1, m2] = pair_at(code, site, 1);
      const std::string& e = X[0];
      const std::string& f = X[1];
      const Sign eps = l1->sign;
      if (e == f || !is_letter(l1, e, eps) || !is_letter(l2, f, -eps)) stale(site, "first pair is not e^s f^-s");
      const bool same = is_letter(m1, e, -eps) && is_letter(m2, f, eps);
      const bool reversed = is_letter(m1, f, eps) && is_letter(m2, e, -eps);
      if (!same && !reversed) stale(site, "second pair does not match");
      break;
    }
    case MoveKind::R3: {
      const std::string& a = X[0];
      const std::string& b = X[1];
      const std::string& c = X[2];
      if (a == b || b == c || a == c) stale(site, "R3 needs three distinct crossings");
      auto [p1, p2] = pair_at(code, site, 0);
      auto [q1, q2] = pair_at(code, site, 1);
      auto [r1, r2] = pair_at(code, site, 2);
      const bool forward = is_letter(p1, a, Sign::Plus) && is_letter(p2, c, Sign::Minus) &&
                           is_letter(q1, b, Sign::Plus) && is_letter(q2, a, Sign::Minus) &&
                           is_letter(r1, c, Sign::Plus) && is_letter(r2, b, Sign::Minus);
      const bool mirrored = is_letter(p1, c, Sign::Minus) && is_letter(p2, a, Sign::Plus) &&
                            is_letter(q1, a, Sign::Minus) && is_letter(q2, b, Sign::Plus) &&
                            is_letter(r1, b, Sign::Minus) && is_letter(r2, c, Sign::Plus);
      if (!forward && !mirrored) stale(site, "no cyclic triangle here");
      break;
    }
    default:
      break;
  }
}

}  // namespace

std::string to_log_line(const MoveSite& site) {
  std::ostringstream out;
  out << to_string(site.kind) << ' ' << join(site.components, ',') << ' ' << join(site.positions, ',') << ' ';
  if (is_insert(site.kind)) {
    for (std::size_t i = 0; i < site.letters.size(); ++i) {
      if (i > 0) out << (i % 2 == 0 ? '/' : ',');
      out << to_string(site.letters[i]);
    }
  } else {
    out << join(site.crossings, ',');
  }
  return out.str();
}

MoveSite parse_log_line(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string kind, comps, positions, payload, extra;
  if (!(in >> kind >> comps >> positions >> payload) || (in >> extra)) {
    throw Error(ErrorCode::MalformedMoveLog, std::string(line), "expected <kind> <components> <positions> <crossings>");
  }
  MoveSite site;
  site.kind = parse_move_kind(kind);
  site.components = parse_indices(comps);
  site.positions = parse_indices(positions);
  if (is_insert(site.kind)) {
    for (auto group : split(payload, '/')) {
      for (auto token : split(group, ',')) {
        const FlatLinkCode one = parse_flat_link(token);
        if (one.components.size() != 1 || one.components[0].letters.size() != 1) {
          throw Error(ErrorCode::MalformedMoveLog, std::string(token), "expected a letter");
        }
        site.letters.push_back(one.components[0].letters[0]);
      }
    }
  } else {
    for (auto token : split(payload, ',')) {
      if (token.empty()) throw Error(ErrorCode::MalformedMoveLog, std::string(payload), "empty crossing name");
      site.crossings.emplace_back(token);
    }
  }
  if (site.components.size() != slot_count(site.kind) || site.positions.size() != slot_count(site.kind)) {
    throw Error(ErrorCode::MalformedMoveLog, std::string(line), "wrong number of slots for the move kind");
  }
  return site;
}

std::vector<std::string> fresh_crossing_ids(const FlatLinkCode& code, std::size_t count) {
  std::set<std::string> used;
  for (const auto& w : code.components) {
    for (const auto& l : w.letters) used.insert(l.crossing);
  }
  std::vector<std::string> out;
  for (std::size_t k = 1; out.size() < count; ++k) {
    std::string id = "_" + std::to_string(k);
    if (!used.count(id)) out.push_back(std::move(id));
  }
  return out;
}

std::vector<MoveSite> find_move_sites(const FlatLinkCode& code, MoveKind kind) {
  if (is_insert(kind)) {
    const auto slots = insertion_slots(code);
    const auto fresh = fresh_crossing_ids(code, 2);
    std::vector<MoveSite> sites;
    const std::size_t count = insert_site_count(kind, slots.size());
    sites.reserve(count);
    for (std::size_t i = 0; i < count; ++i) sites.push_back(insert_site_at(kind, slots, fresh, i));
    return sites;
  }
  const CrossingCatalog catalog = validate(code);
  if (kind == MoveKind::R1Remove) return r1_remove_sites(code);
  const Locator loc(catalog);
  if (kind == MoveKind::R2Remove) return r2_remove_sites(code, loc);
  return r3_sites(code, loc);
}

std::vector<MoveSite> find_move_sites(const FlatLinkCode& code, const std::set<MoveKind>& kinds) {
  std::vector<MoveSite> out;
  for (MoveKind k : kAllMoveKinds) {
    if (!kinds.count(k)) continue;
    auto sites = find_move_sites(code, k);
    out.insert(out.end(), std::make_move_iterator(sites.begin()), std::make_move_iterator(sites.end()));
  }
  return out;
}

FlatLinkCode apply_move(const FlatLinkCode& code, const MoveSite& site) {
  validate(code);
  check_structure(code, site);
  FlatLinkCode out = code;

  if (is_insert(site.kind)) {
    check_insert_letters(code, site);
    for (std::size_t c = 0; c < code.components.size(); ++c) {
      const auto& src = code.components[c].letters;
      std::vector<Letter> dst;
      for (std::size_t i = 0; i <= src.size(); ++i) {
        for (std::size_t s = 0; s < site.components.size(); ++s) {
          if (site.components[s] == c && site.positions[s] == i) {
            dst.push_back(site.letters[2 * s]);
            dst.push_back(site.letters[2 * s + 1]);
          }
        }
        if (i < src.size()) dst.push_back(src[i]);
      }
      out.components[c].letters = std::move(dst);
    }
    return out;
  }

  check_remove_or_r3(code, site);
  if (site.kind == MoveKind::R3) {
    for (std::size_t s = 0; s < 3; ++s) {
      auto& letters = out.components[site.components[s]].letters;
      const std::size_t p = site.positions[s];
      std::swap(letters[p], letters[(p + 1) % letters.size()]);
    }
    return out;
  }

  for (std::size_t s = 0; s < site.components.size(); ++s) {
    auto& letters = out.components[site.components[s]].letters;
    const std::size_t p = site.positions[s];
    // Mark by clearing; erased below.
    letters[p].crossing.clear();
    letters[(p + 1) % letters.size()].crossing.clear();
  }
  for (auto& w : out.components) {
    std::erase_if(w.letters, [](const Letter& l) { return l.crossing.empty(); });
  }
  return out;
}

MovePolicy MovePolicy::parse(std::string_view text) {
  MovePolicy policy;
  if (text.empty()) return policy;
  for (auto item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::MalformedToken, std::string(item), "expected Kind=weight");
    const MoveKind kind = parse_move_kind(item.substr(0, eq));
    const std::string number(item.substr(eq + 1));
    double w = 0;
    try {
      std::size_t used = 0;
      w = std::stod(number, &used);
      if (used != number.size()) throw std::invalid_argument(number);
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedToken, std::string(item), "bad weight");
    }
    if (w < 0) throw Error(ErrorCode::MalformedToken, std::string(item), "negative weight");
    policy.weights[static_cast<std::size_t>(kind)] = w;
  }
  return policy;
}

WalkResult random_walk(const FlatLinkCode& code, std::size_t steps, std::uint64_t seed, const MovePolicy& policy) {
  validate(code);
  std::mt19937_64 rng(seed);
  auto uniform_index = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto unit = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  WalkResult result{code, {}};
  for (std::size_t step = 0; step < steps; ++step) {
    const FlatLinkCode& cur = result.code;
    const auto slots = insertion_slots(cur);
    const CrossingCatalog catalog = validate(cur);
    const Locator loc(catalog);

    std::array<std::vector<MoveSite>, 5> listed;
    std::array<std::size_t, 5> counts{};
    for (std::size_t k = 0; k < kAllMoveKinds.size(); ++k) {
      const MoveKind kind = kAllMoveKinds[k];
      if (policy.weights[k] <= 0) continue;
      if (is_insert(kind)) {
        counts[k] = insert_site_count(kind, slots.size());
      } else {
        listed[k] = kind == MoveKind::R1Remove   ? r1_remove_sites(cur)
                    : kind == MoveKind::R2Remove ? r2_remove_sites(cur, loc)
                                                 : r3_sites(cur, loc);
        counts[k] = listed[k].size();
      }
    }
    double total = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] > 0) total += policy.weights[k];
    }
    if (total <= 0) break;
    double draw = unit() * total;
    std::size_t chosen = counts.size();
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] == 0) continue;
      chosen = k;
      if (draw < policy.weights[k]) break;
      draw -= policy.weights[k];
    }
    const MoveKind kind = kAllMoveKinds[chosen];
    const std::size_t index = uniform_index(counts[chosen]);
    MoveSite site = is_insert(kind) ? insert_site_at(kind, slots, fresh_crossing_ids(cur, 2), index)
                                    : std::move(listed[chosen][index]);
    result.code = apply_move(cur, site);
    result.log.push_back(std::move(site));
  }
  return result;
}

}  // namespace flatlink
