#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flatlink/error.hpp"
#include "flatlink/filament.hpp"
#include "flatlink/gauss_code.hpp"
#include "flatlink/genlab.hpp"
#include "flatlink/invariant.hpp"
#include "flatlink/json_io.hpp"
#include "flatlink/moves.hpp"

namespace py = pybind11;
using namespace flatlink;

namespace {

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(flatlink, m) {
  m.doc() = "Polynomial invariant and filamentations of flat virtual links given by Gauss codes";

  py::register_exception<Error>(m, "FlatLinkError", PyExc_ValueError);

  py::enum_<Sign>(m, "Sign").value("Plus", Sign::Plus).value("Minus", Sign::Minus);

  py::class_<Letter>(m, "Letter")
      .def_readonly("crossing", &Letter::crossing)
      .def_readonly("sign", &Letter::sign)
      .def("__repr__", [](const Letter& l) { return to_string(l); });

  py::class_<Codeword>(m, "Codeword")
      .def_readonly("name", &Codeword::name)
      .def_readonly("letters", &Codeword::letters)
      .def("__len__", &Codeword::size);

  py::class_<FlatLinkCode>(m, "FlatLinkCode")
      .def_readonly("components", &FlatLinkCode::components)
      .def("__str__", [](const FlatLinkCode& c) { return render_flat_link(c); })
      .def("__repr__", [](const FlatLinkCode& c) { return "FlatLinkCode('" + render_flat_link(c) + "')"; })
      .def(py::self == py::self);

  m.def("parse", &parse_flat_link, py::arg("text"));
  m.def("render", &render_flat_link, py::arg("code"));

  m.def(
      "validate",
      [](const FlatLinkCode& code) {
        const CrossingCatalog catalog = validate(code);
        py::list out;
        for (const auto& x : catalog.crossings) {
          py::dict d;
          d["id"] = x.id;
          d["self"] = x.is_self();
          d["plus"] = py::make_tuple(x.plus.component, x.plus.position);
          d["minus"] = py::make_tuple(x.minus.component, x.minus.position);
          out.append(d);
        }
        return out;
      },
      py::arg("code"), "Validates the code and returns one dict per crossing.");

  m.def("total_sign", &total_sign, py::arg("code"), py::arg("component"));
  m.def("eta", py::overload_cast<const FlatLinkCode&, std::size_t, std::size_t, std::size_t>(&eta), py::arg("code"),
        py::arg("component"), py::arg("start"), py::arg("stop"));
  m.def("flat_linking_diff", py::overload_cast<const FlatLinkCode&, std::size_t, std::size_t>(&flat_linking_diff),
        py::arg("code"), py::arg("a"), py::arg("b"));
  m.def(
      "self_polynomial",
      [](const FlatLinkCode& code, std::size_t component) { return self_polynomial(code, component).terms(); },
      py::arg("code"), py::arg("component"), "Exponent -> coefficient.");
  m.def(
      "link_polynomial", [](const FlatLinkCode& code) { return to_python(to_json(link_polynomial(code))); },
      py::arg("code"));
  m.def(
      "link_filamentation",
      [](const FlatLinkCode& code) { return to_python(to_json(link_filamentation(code))); }, py::arg("code"));
  m.def(
      "brute_force_filamentation",
      [](const FlatLinkCode& code, std::size_t cap) { return to_python(to_json(brute_force_filamentation(code, cap))); },
      py::arg("code"), py::arg("cap") = kOracleCrossingCap);
  m.def(
      "codes_equivalent",
      [](const FlatLinkCode& a, const FlatLinkCode& b, bool relabel) { return codes_equivalent_syntactically(a, b, relabel); },
      py::arg("lhs"), py::arg("rhs"), py::arg("allow_relabel") = false);

  m.def(
      "move_sites",
      [](const FlatLinkCode& code) {
        std::vector<std::string> lines;
        for (const auto& s : find_move_sites(code, std::set<MoveKind>(kAllMoveKinds.begin(), kAllMoveKinds.end()))) {
          lines.push_back(to_log_line(s));
        }
        return lines;
      },
      py::arg("code"), "All applicable moves as log lines.");
  m.def(
      "apply_move", [](const FlatLinkCode& code, const std::string& line) { return apply_move(code, parse_log_line(line)); },
      py::arg("code"), py::arg("log_line"));
  m.def(
      "random_walk",
      [](const FlatLinkCode& code, std::size_t steps, std::uint64_t seed) {
        WalkResult walk = random_walk(code, steps, seed);
        std::vector<std::string> log;
        for (const auto& s : walk.log) log.push_back(to_log_line(s));
        return py::make_tuple(walk.code, log);
      },
      py::arg("code"), py::arg("steps"), py::arg("seed"));

  m.def(
      "enumerate_small_codes",
      [](std::size_t crossings, std::size_t components) {
        std::vector<std::string> out;
        for (const auto& c : enumerate_small_codes(crossings, components)) out.push_back(render_flat_link(c));
        return out;
      },
      py::arg("crossings"), py::arg("components") = 1);
  m.def(
      "search_examples",
      [](const std::string& goal, std::size_t max_crossings, std::size_t max_components) -> std::optional<FlatLinkCode> {
        py::gil_scoped_release release;
        return search_examples(parse_search_goal(goal), {max_components, max_crossings, 1});
      },
      py::arg("goal"), py::arg("max_crossings"), py::arg("max_components"));
}
