#include "hftwo/diagram_json.hpp"

#include <json.hpp>

namespace hftwo {

using json = nlohmann::ordered_json;

std::string diagram_to_json(const AdaptedDiagram& d) {
  json j;
  j["format"] = "hftwo-diagram";
  j["version"] = 1;
  json grid;
  grid["n"] = d.eg.n();
  json xs = json::array(), os = json::array();
  for (int i = 0; i < d.eg.n(); ++i) {
    xs.push_back(d.eg.base.xcol[i] + 1);
    os.push_back(d.eg.base.ocol[i] + 1);
  }
  grid["x"] = xs;
  grid["o"] = os;
  grid["sides"] = sides_string(d.eg);
  j["grid"] = grid;
  json sig = json::array();
  for (S3 s : d.mono.sigma) sig.push_back(s.str());
  j["sigma"] = sig;
  j["endcircle"] = d.endcircle == EndcircleConvention::Top ? "top" : "bottom";
  json h = json::array(), v = json::array();
  for (S3 s : d.coc.h) h.push_back(int(s.index()));
  for (S3 s : d.coc.v) v.push_back(int(s.index()));
  j["cocycle"] = {{"h", h}, {"v", v}};

  json faces = json::array();
  for (const auto& f : d.surf.faces) {
    json jf;
    jf["px"] = f.px;
    jf["py"] = f.py;
    jf["octagon"] = f.octagon;
    jf["ll_sheet"] = int(f.ll_sheet);
    json bd = json::array();
    for (auto [e, rev] : f.boundary) bd.push_back(json::array({e, rev}));
    jf["boundary"] = bd;
    faces.push_back(jf);
  }
  j["surface"] = {{"vertices", d.surf.vertex_count()},
                  {"edges", d.surf.edge_count()},
                  {"euler_characteristic", d.surf.euler_characteristic()},
                  {"genus", d.surf.genus()},
                  {"faces", faces}};

  json curves = json::array();
  for (const auto& lift : d.lifts) {
    json jc;
    jc["family"] = lift.family == 0 ? "alpha" : "beta";
    jc["line"] = lift.line;
    jc["new"] = lift.is_new;
    jc["double_cover"] = lift.double_cover;
    jc["selected"] = lift.selected;
    jc["index"] = lift.sel_index;
    jc["edges"] = lift.edges;
    curves.push_back(jc);
  }
  j["curves"] = curves;

  json domains = json::array();
  for (const auto& dom : d.domains) {
    json jd;
    jd["faces"] = dom.faces;
    jd["octagon_face"] = dom.octagon_face;
    jd["corners"] = dom.corners;
    jd["basepoint"] = dom.basepoint;
    domains.push_back(jd);
  }
  j["domains"] = domains;
  j["basepoints"] = d.basepoints;

  json crossings = json::array();
  for (const auto& c : d.crossings) {
    json jc;
    jc["vertex"] = c.vertex;
    jc["alpha"] = c.alpha;
    jc["beta"] = c.beta;
    jc["px"] = c.px;
    jc["py"] = c.py;
    jc["sheet"] = int(c.sheet);
    jc["quad"] = c.quad;
    crossings.push_back(jc);
  }
  j["crossings"] = crossings;
  return j.dump(1);
}

std::optional<AdaptedDiagram> diagram_from_json(const std::string& text,
                                                DiagramError& err) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || j.value("format", "") != "hftwo-diagram") {
    err = {"json", "not an hftwo-diagram file"};
    return std::nullopt;
  }
  GridSpec g;
  g.n = j["grid"]["n"].get<int>();
  for (auto& v : j["grid"]["x"]) g.xcol.push_back(v.get<int>() - 1);
  for (auto& v : j["grid"]["o"]) g.ocol.push_back(v.get<int>() - 1);
  GridError gerr;
  auto eg = extend_grid(g, j["grid"]["sides"].get<std::string>(), gerr);
  if (!eg) {
    err = {"json", gerr.message};
    return std::nullopt;
  }
  Monodromy mono;
  for (auto& v : j["sigma"]) {
    bool ok = false;
    mono.sigma.push_back(parse_transposition(v.get<std::string>(), ok));
    if (!ok) {
      err = {"json", "bad sigma entry"};
      return std::nullopt;
    }
  }
  auto conv = j.value("endcircle", "top") == std::string("top")
                  ? EndcircleConvention::Top
                  : EndcircleConvention::Bottom;
  TransitionCocycle coc;
  coc.N = eg->size();
  for (auto& v : j["cocycle"]["h"]) coc.h.push_back(S3(v.get<uint8_t>()));
  for (auto& v : j["cocycle"]["v"]) coc.v.push_back(S3(v.get<uint8_t>()));
  if ((int)coc.h.size() != coc.N * coc.N ||
      (int)coc.v.size() != coc.N * coc.N) {
    err = {"json", "cocycle size mismatch"};
    return std::nullopt;
  }
  auto d = build_diagram_with_cocycle(*eg, mono, conv, coc, err);
  if (!d) return std::nullopt;
  // Cross-check the derived tables that travelled with the file.
  if (j.contains("domains") &&
      j["domains"].size() != d->domains.size()) {
    err = {"json", "domain table does not match rebuilt diagram"};
    return std::nullopt;
  }
  if (j.contains("crossings") &&
      j["crossings"].size() != d->crossings.size()) {
    err = {"json", "crossing table does not match rebuilt diagram"};
    return std::nullopt;
  }
  return d;
}

}  // namespace hftwo
