// Python bindings for the main operations: parsing, validation, diagram
// construction, generator counting, sampled differential checks, homology.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>

#include "hftwo/complex.hpp"
#include "hftwo/diagram.hpp"
#include "hftwo/diagram_json.hpp"
#include "hftwo/differential.hpp"
#include "hftwo/generators.hpp"
#include "hftwo/monodromy.hpp"

namespace py = pybind11;
using namespace hftwo;

namespace {

struct PyDiagram {
  AdaptedDiagram d;
};

PyDiagram build_from_text(const std::string& grid_text,
                          const std::string& sigma_text,
                          const std::string& sides,
                          const std::string& endcircle) {
  GridError gerr;
  auto parsed = parse_grid(grid_text, gerr);
  if (!parsed) throw std::invalid_argument("grid: " + gerr.message);
  auto eg = extend_grid(parsed->grid, sides.empty() ? parsed->sides : sides,
                        gerr);
  if (!eg) throw std::invalid_argument("extend: " + gerr.message);
  std::string serr;
  auto mono = parse_sigma(sigma_text, parsed->grid.n, serr);
  if (!mono) throw std::invalid_argument("sigma: " + serr);
  DiagramError derr;
  auto d = build_diagram(*eg, *mono,
                         endcircle == "bottom" ? EndcircleConvention::Bottom
                                               : EndcircleConvention::Top,
                         derr);
  if (!d) throw std::runtime_error(derr.check + ": " + derr.message);
  return PyDiagram{std::move(*d)};
}

}  // namespace

PYBIND11_MODULE(_hftwo, m) {
  m.doc() = "combinatorial U^2-truncated Heegaard Floer complexes of "
            "simple triple branched covers presented by grid diagrams";

  py::class_<PyDiagram>(m, "Diagram")
      .def_property_readonly("n", [](const PyDiagram& p) { return p.d.n(); })
      .def_property_readonly("genus",
                             [](const PyDiagram& p) { return p.d.surf.genus(); })
      .def_property_readonly(
          "alpha_count",
          [](const PyDiagram& p) { return p.d.alpha.size(); })
      .def_property_readonly(
          "beta_count", [](const PyDiagram& p) { return p.d.beta.size(); })
      .def_property_readonly(
          "basepoints",
          [](const PyDiagram& p) { return p.d.basepoints.size(); })
      .def_property_readonly(
          "domain_count",
          [](const PyDiagram& p) { return p.d.domains.size(); })
      .def("generator_count",
           [](const PyDiagram& p) { return u128_str(permanent_count(p.d)); })
      .def("properties",
           [](const PyDiagram& p) {
             py::dict out;
             for (const auto& c : validate_properties(p.d))
               out[py::str(c.name)] = c.pass;
             return out;
           })
      .def("to_json", [](const PyDiagram& p) { return diagram_to_json(p.d); })
      .def("canonical_form",
           [](const PyDiagram& p) { return canonical_form(p.d); })
      .def("dsq_sample",
           [](const PyDiagram& p, int samples, uint64_t seed) {
             std::mt19937_64 rng(seed);
             int failures = 0;
             for (int i = 0; i < samples; ++i) {
               Generator x = sample_generator(p.d, rng);
               auto first = enumerate_differential_domains(p.d, x);
               std::map<std::pair<std::string, int>, int> acc;
               for (const auto& t1 : first)
                 for (const auto& t2 :
                      enumerate_differential_domains(p.d, t1.y)) {
                   int w = t1.upower + t2.upower;
                   if (w < 2) acc[{generator_key(t2.y), w}] ^= 1;
                 }
               for (auto& [k, parity] : acc)
                 if (parity) ++failures;
             }
             return failures;
           },
           py::arg("samples") = 10, py::arg("seed") = 1);

  m.def("build_diagram", &build_from_text, py::arg("grid_text"),
        py::arg("sigma"), py::arg("sides") = "", py::arg("endcircle") = "top");
  m.def("parse_grid_ok", [](const std::string& text) {
    GridError err;
    return parse_grid(text, err).has_value();
  });
  m.def("trace_components", [](const std::string& text) {
    GridError err;
    auto parsed = parse_grid(text, err);
    if (!parsed) throw std::invalid_argument(err.message);
    return trace_link(parsed->grid).components.size();
  });
  m.def("enumerate_monodromies", [](const std::string& text) {
    GridError err;
    auto parsed = parse_grid(text, err);
    if (!parsed) throw std::invalid_argument(err.message);
    std::vector<std::string> out;
    for (const auto& m : enumerate_monodromies(parsed->grid))
      out.push_back(sigma_string(m));
    return out;
  });
  m.def("homology_of_complex", [](const std::string& json_text) {
    std::string err;
    auto c = complex_from_json(json_text, err);
    if (!c) throw std::invalid_argument(err);
    if (verify_d_squared(*c)) throw std::runtime_error("d^2 != 0");
    auto h = homology(*c);
    py::dict out;
    out["rank"] = h.rank;
    out["free_summands"] = h.free_summands;
    out["f2_summands"] = h.f2_summands;
    return out;
  });
}
