#include "flatlink/json_io.hpp"

namespace flatlink {

using nlohmann::json;

json to_json(const LinkInvariant& inv) {
  json components = json::array();
  for (const auto& [name, poly] : inv.component_polys) {
    json terms = json::object();
    for (const auto& [e, c] : poly.terms()) terms[std::to_string(e)] = c;
    components.push_back({{"name", name}, {"poly", terms}});
  }
  json pairs = json::array();
  for (const auto& [key, coeff] : inv.pair_coeffs) pairs.push_back({{"a", key.first}, {"b", key.second}, {"coeff", coeff}});
  json linking = json::array();
  for (const auto& [key, diff] : inv.linking_diffs) linking.push_back({{"a", key.first}, {"b", key.second}, {"diff", diff}});
  return {{"components", components}, {"pairs", pairs}, {"linking", linking}};
}

LinkInvariant invariant_from_json(const json& j) {
  LinkInvariant inv;
  for (const auto& c : j.at("components")) {
    SparsePoly poly;
    for (const auto& [exp, coeff] : c.at("poly").items()) poly.add_term(std::stoi(exp), coeff.get<std::int64_t>());
    inv.component_polys[c.at("name").get<std::string>()] = poly;
  }
  for (const auto& p : j.at("pairs")) {
    inv.pair_coeffs[make_name_pair(p.at("a"), p.at("b"))] = p.at("coeff").get<std::int64_t>();
  }
  for (const auto& l : j.at("linking")) {
    inv.linking_diffs[make_name_pair(l.at("a"), l.at("b"))] = l.at("diff").get<std::int64_t>();
  }
  return inv;
}

json to_json(const std::optional<Filamentation>& f) {
  if (!f) return {{"exists", false}};
  json bi = json::array();
  for (const auto& [x, y] : f->bi) bi.push_back({x, y});
  return {{"mono", f->mono}, {"bi", bi}};
}

std::optional<Filamentation> filamentation_from_json(const json& j) {
  if (j.contains("exists") && !j.at("exists").get<bool>()) return std::nullopt;
  Filamentation f;
  f.mono = j.at("mono").get<std::vector<std::string>>();
  for (const auto& pair : j.at("bi")) f.bi.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
  return f;
}

}  // namespace flatlink
