#include "hftwo/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hftwo/intmat.hpp"
#include "hftwo/ratlp.hpp"

namespace hftwo {

namespace {

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

std::optional<DiagramError> compute_lifts(AdaptedDiagram& d) {
  const int N = d.surf.N;
  d.lift_of_edge.assign(d.surf.edge_count(), -1);
  for (int family = 0; family < 2; ++family) {
    for (int line = 0; line < N; ++line) {
      bool seen[3] = {false, false, false};
      for (uint8_t s0 = 0; s0 < 3; ++s0) {
        if (seen[s0]) continue;
        CurveLift lift;
        lift.family = family;
        lift.line = line;
        lift.is_new = line % 2 == 1;
        uint8_t s = s0;
        do {
          seen[s] = true;
          for (int k = 0; k < N; ++k) {
            int px = family == 0 ? k : line;
            int py = family == 0 ? line : k;
            int e = d.surf.eid(family, px, py, s);
            lift.edges.push_back(e);
            d.lift_of_edge[e] = static_cast<int>(d.lifts.size());
            s = (family == 0 ? d.coc.hedge(px, py) : d.coc.vedge(px, py))(s);
          }
        } while (s != s0);
        lift.double_cover = lift.edges.size() == static_cast<size_t>(2 * N);
        if (lift.edges.size() == static_cast<size_t>(3 * N))
          return DiagramError{"lift-curves",
                              "a curve lift triple-covers its projection"};
        d.lifts.push_back(std::move(lift));
      }
    }
  }
  return std::nullopt;
}

// Components of the faces over one grid annulus (strip), glued across the
// strip's interior edges only. Returns component root per face (-1 when the
// face is outside the strip) and whether each root's component holds octagons.
struct StripComponents {
  std::vector<int> root;            // per upstairs face
  std::vector<int> octagons;        // per upstairs face root: octagon count
  int annular_root = -1;
  int sphere_root = -1;
};

std::optional<DiagramError> strip_components(const AdaptedDiagram& d,
                                             int family, int strip,
                                             StripComponents& out) {
  const int N = d.surf.N;
  const auto& surf = d.surf;
  int rows[2] = {2 * strip, 2 * strip + 1};
  std::vector<char> in_strip(surf.faces.size(), 0);
  for (size_t f = 0; f < surf.faces.size(); ++f) {
    int pos = family == 0 ? surf.faces[f].py : surf.faces[f].px;
    if (pos == rows[0] || pos == rows[1]) in_strip[f] = 1;
  }
  UF uf(static_cast<int>(surf.faces.size()));
  auto unite_edge = [&](int e) {
    int a = surf.edge_faces[e][0], b = surf.edge_faces[e][1];
    uf.unite(a, b);
  };
  for (uint8_t s = 0; s < 3; ++s)
    for (int k = 0; k < N; ++k) {
      if (family == 0) {
        // interior: the middle horizontal line and both rows of verticals
        unite_edge(surf.eid(0, k, rows[1], s));
        unite_edge(surf.eid(1, k, rows[0], s));
        unite_edge(surf.eid(1, k, rows[1], s));
      } else {
        unite_edge(surf.eid(1, rows[1], k, s));
        unite_edge(surf.eid(0, rows[0], k, s));
        unite_edge(surf.eid(0, rows[1], k, s));
      }
    }
  out.root.assign(surf.faces.size(), -1);
  out.octagons.assign(surf.faces.size(), 0);
  std::vector<int> roots;
  for (size_t f = 0; f < surf.faces.size(); ++f) {
    if (!in_strip[f]) continue;
    int r = uf.find(static_cast<int>(f));
    out.root[f] = r;
    if (surf.faces[f].octagon) ++out.octagons[r];
    if (std::find(roots.begin(), roots.end(), r) == roots.end())
      roots.push_back(r);
  }
  if (roots.size() != 2)
    return DiagramError{"strip-components",
                        "annulus preimage has " + std::to_string(roots.size()) +
                            " components (want 2)"};
  for (int r : roots) {
    if (out.octagons[r] == 0)
      out.annular_root = r;
    else if (out.octagons[r] == 2)
      out.sphere_root = r;
  }
  if (out.annular_root < 0 || out.sphere_root < 0)
    return DiagramError{"strip-components",
                        "annulus preimage octagon counts are not {0,2}"};
  return std::nullopt;
}

std::optional<DiagramError> select_curves(AdaptedDiagram& d) {
  const int n = d.n();
  for (int family = 0; family < 2; ++family) {
    // Strip adjacency data per old line.
    std::vector<StripComponents> comp(n);
    for (int s = 0; s < n; ++s)
      if (auto e = strip_components(d, family, s, comp[s])) return e;
    for (auto& lift : d.lifts) {
      if (lift.family != family) continue;
      if (lift.is_new) {
        lift.selected = lift.double_cover;
        continue;
      }
      int i = lift.line / 2;
      bool top = d.endcircle == EndcircleConvention::Top;
      int strip = top ? (i - 1 + n) % n : i;
      // Face on the strip's side of this lift's first edge.
      int e = lift.edges.front();
      int side = (family == 0) == top ? 1 : 0;
      // family 0, Top: strip below the line -> right of a rightward edge.
      // family 1, Top: strip left of the line -> left of an upward edge.
      if (family == 1) side = top ? 0 : 1;
      int f = d.surf.edge_faces[e][side];
      int r = comp[strip].root[f];
      if (r < 0)
        return DiagramError{"select-curves",
                            "lift not adjacent to its endcircle strip"};
      lift.selected = (r != comp[strip].annular_root);
    }
    // Per new line exactly one double cover must exist.
    for (int line = 1; line < d.surf.N; line += 2) {
      int doubles = 0, total = 0;
      for (auto& lift : d.lifts)
        if (lift.family == family && lift.line == line) {
          ++total;
          doubles += lift.double_cover ? 1 : 0;
        }
      if (total != 2 || doubles != 1)
        return DiagramError{"lift-curves",
                            "new curve preimage is not one double cover plus "
                            "one single cover"};
    }
    for (int line = 0; line < d.surf.N; line += 2) {
      int total = 0, kept = 0;
      for (auto& lift : d.lifts)
        if (lift.family == family && lift.line == line) {
          ++total;
          kept += lift.selected ? 1 : 0;
        }
      if (total != 3)
        return DiagramError{"lift-curves",
                            "old curve does not lift to three copies"};
      if (kept != 2)
        return DiagramError{"select-curves",
                            "old curve selection kept " + std::to_string(kept) +
                                " lifts (want 2)"};
    }
  }
  for (size_t l = 0; l < d.lifts.size(); ++l) {
    auto& lift = d.lifts[l];
    if (!lift.selected) continue;
    if (lift.family == 0) {
      lift.sel_index = static_cast<int>(d.alpha.size());
      d.alpha.push_back(static_cast<int>(l));
    } else {
      lift.sel_index = static_cast<int>(d.beta.size());
      d.beta.push_back(static_cast<int>(l));
    }
  }
  if (static_cast<int>(d.alpha.size()) != 3 * n ||
      static_cast<int>(d.beta.size()) != 3 * n)
    return DiagramError{"select-curves", "selected curve count is not 3n"};
  return std::nullopt;
}

std::optional<DiagramError> merge_domains(AdaptedDiagram& d) {
  const auto& surf = d.surf;
  UF uf(static_cast<int>(surf.faces.size()));
  for (int e = 0; e < surf.edge_count(); ++e)
    if (!d.lifts[d.lift_of_edge[e]].selected)
      uf.unite(surf.edge_faces[e][0], surf.edge_faces[e][1]);
  std::vector<int> id_of_root(surf.faces.size(), -1);
  d.domain_of_face.assign(surf.faces.size(), -1);
  for (size_t f = 0; f < surf.faces.size(); ++f) {
    int r = uf.find(static_cast<int>(f));
    if (id_of_root[r] < 0) {
      id_of_root[r] = static_cast<int>(d.domains.size());
      d.domains.emplace_back();
    }
    int id = id_of_root[r];
    d.domain_of_face[f] = id;
    d.domains[id].faces.push_back(static_cast<int>(f));
    if (surf.faces[f].octagon) {
      if (d.domains[id].octagon_face >= 0)
        return DiagramError{"merge-domains",
                            "two octagon faces in one elementary domain"};
      d.domains[id].octagon_face = static_cast<int>(f);
    }
  }
  // Basepoints: one per octagonal domain, ordered by octagon face id.
  std::vector<std::pair<int, int>> octs;
  for (size_t i = 0; i < d.domains.size(); ++i)
    if (d.domains[i].octagon_face >= 0)
      octs.emplace_back(d.domains[i].octagon_face, static_cast<int>(i));
  std::sort(octs.begin(), octs.end());
  for (auto [face, dom] : octs) {
    d.domains[dom].basepoint = static_cast<int>(d.basepoints.size());
    d.basepoints.push_back(dom);
  }
  return std::nullopt;
}

std::optional<DiagramError> compute_crossings(AdaptedDiagram& d) {
  const auto& surf = d.surf;
  const int N = surf.N;
  d.crossing_at_vertex.assign(surf.vertex_count(), -1);
  d.pair_points.assign(d.alpha.size(),
                       std::vector<std::vector<int>>(d.beta.size()));
  for (int py = 0; py < N; ++py)
    for (int px = 0; px < N; ++px)
      for (uint8_t s = 0; s < 3; ++s) {
        int hl = d.lift_of_edge[surf.eid(0, px, py, s)];
        int vl = d.lift_of_edge[surf.eid(1, px, py, s)];
        if (!d.lifts[hl].selected || !d.lifts[vl].selected) continue;
        Crossing c;
        c.vertex = surf.vid(px, py, s);
        c.alpha = d.lifts[hl].sel_index;
        c.beta = d.lifts[vl].sel_index;
        c.px = px;
        c.py = py;
        c.sheet = s;
        for (int q = 0; q < 4; ++q)
          c.quad[q] = d.domain_of_face[surf.vertex_quadrant[c.vertex][q]];
        d.crossing_at_vertex[c.vertex] = static_cast<int>(d.crossings.size());
        d.pair_points[c.alpha][c.beta].push_back(
            static_cast<int>(d.crossings.size()));
        d.crossings.push_back(c);
      }
  return std::nullopt;
}

std::optional<DiagramError> classify_domains(AdaptedDiagram& d) {
  const auto& surf = d.surf;
  std::vector<int> corners(d.domains.size(), 0);
  for (const Crossing& c : d.crossings) {
    for (int q = 0; q < 4; ++q) {
      int dom = c.quad[q];
      int occ = 0;
      for (int r = 0; r < 4; ++r) occ += c.quad[r] == dom ? 1 : 0;
      if (occ == 1) ++corners[dom];
      if (occ == 2 && c.quad[(q + 2) % 4] == dom)
        return DiagramError{"domain-shape",
                            "domain touches itself diagonally at a crossing"};
      if (occ == 3)
        return DiagramError{"domain-shape",
                            "domain has a reflex corner at a crossing"};
    }
  }
  for (size_t i = 0; i < d.domains.size(); ++i)
    d.domains[i].corners = corners[i];
  std::vector<int> vint(d.domains.size(), 0), eint(d.domains.size(), 0);
  for (int v = 0; v < surf.vertex_count(); ++v) {
    int dom = d.domain_of_face[surf.vertex_quadrant[v][0]];
    bool same = true;
    for (int q = 1; q < 4; ++q)
      same = same && d.domain_of_face[surf.vertex_quadrant[v][q]] == dom;
    if (same) ++vint[dom];
  }
  for (int e = 0; e < surf.edge_count(); ++e) {
    int a = d.domain_of_face[surf.edge_faces[e][0]];
    int b = d.domain_of_face[surf.edge_faces[e][1]];
    if (a != b) continue;
    if (d.lifts[d.lift_of_edge[e]].selected)
      return DiagramError{"domain-shape",
                          "selected curve has the same domain on both sides"};
    ++eint[a];
  }
  for (size_t i = 0; i < d.domains.size(); ++i) {
    auto& dom = d.domains[i];
    int chi = vint[i] - eint[i] + static_cast<int>(dom.faces.size());
    dom.disk = chi == 1;
    bool rect = dom.corners == 4 && dom.octagon_face < 0;
    bool oct = dom.corners == 8 && dom.octagon_face >= 0;
    if (!dom.disk || (!rect && !oct)) {
      std::ostringstream msg;
      msg << "elementary domain " << i << " is not a rectangle or octagon"
          << " (corners=" << dom.corners << ", chi=" << chi
          << ", octagon=" << (dom.octagon_face >= 0) << ")";
      return DiagramError{"domain-shape", msg.str()};
    }
  }
  if (static_cast<int>(d.basepoints.size()) != 2 * d.n())
    return DiagramError{"basepoints", "basepoint count is not 2n"};
  return std::nullopt;
}

}  // namespace

std::optional<AdaptedDiagram> build_diagram_with_cocycle(
    const ExtendedGrid& eg, const Monodromy& mono, EndcircleConvention conv,
    const TransitionCocycle& coc, DiagramError& err) {
  AdaptedDiagram d;
  d.eg = eg;
  d.mono = mono;
  d.mb = marker_transpositions(eg, mono);
  d.endcircle = conv;
  d.coc = coc;
  std::string serr;
  auto surf = build_surface(eg, d.mb, d.coc, serr);
  if (!surf) {
    err = {"build-surface", serr};
    return std::nullopt;
  }
  d.surf = std::move(*surf);
  if (auto e = compute_lifts(d)) {
    err = *e;
    return std::nullopt;
  }
  if (auto e = select_curves(d)) {
    err = *e;
    return std::nullopt;
  }
  if (auto e = merge_domains(d)) {
    err = *e;
    return std::nullopt;
  }
  if (auto e = compute_crossings(d)) {
    err = *e;
    return std::nullopt;
  }
  if (auto e = classify_domains(d)) {
    err = *e;
    return std::nullopt;
  }
  return d;
}

std::optional<AdaptedDiagram> build_diagram(const ExtendedGrid& eg,
                                            const Monodromy& mono,
                                            EndcircleConvention conv,
                                            DiagramError& err) {
  if (auto f = validate_wirtinger(eg.base, mono)) {
    err = {"wirtinger", f->message};
    return std::nullopt;
  }
  if (auto f = validate_transitive(mono)) {
    err = {"transitivity", f->message};
    return std::nullopt;
  }
  MarkerBranching mb = marker_transpositions(eg, mono);
  CocycleError cerr;
  auto coc = build_cocycle(eg, mb, cerr);
  if (!coc) {
    err = {"build-cocycle", cerr.message};
    return std::nullopt;
  }
  return build_diagram_with_cocycle(eg, mono, conv, *coc, err);
}

std::vector<std::vector<long long>> constraint_matrix(
    const AdaptedDiagram& d) {
  std::vector<std::vector<long long>> a(
      d.crossings.size(), std::vector<long long>(d.domains.size(), 0));
  static const int sign[4] = {+1, -1, +1, -1};  // NE,NW,SW,SE
  for (size_t c = 0; c < d.crossings.size(); ++c)
    for (int q = 0; q < 4; ++q) a[c][d.crossings[c].quad[q]] += sign[q];
  return a;
}

std::vector<std::vector<long long>> periodic_lattice(const AdaptedDiagram& d) {
  auto a = constraint_matrix(d);
  for (int dom : d.basepoints) {
    std::vector<long long> row(d.domains.size(), 0);
    row[dom] = 1;
    a.push_back(std::move(row));
  }
  ColumnReduction cr(a);
  return cr.kernel();
}

AdmissibilityResult check_admissibility(
    const AdaptedDiagram& d,
    const std::vector<std::vector<long long>>& lattice) {
  AdmissibilityResult res;
  res.admissible = true;
  int k = static_cast<int>(lattice.size());
  if (k == 0) return res;
  int m = d.num_domains();
  for (int target = 0; target < m; ++target) {
    std::vector<LinearConstraint> cons;
    for (int dom = 0; dom < m; ++dom) {
      LinearConstraint c;
      c.a.resize(k);
      for (int b = 0; b < k; ++b) c.a[b] = lattice[b][dom];
      c.c = dom == target ? -1 : 0;  // target multiplicity >= 1, others >= 0
      cons.push_back(std::move(c));
    }
    auto pt = fm_feasible(cons, k);
    if (!pt) continue;
    res.admissible = false;
    res.counterexample.assign(m, 0);
    // Scale the rational point to an integer lattice combination.
    for (int dom = 0; dom < m; ++dom) {
      long long acc = 0;
      for (int b = 0; b < k; ++b) acc += pt->num[b] * lattice[b][dom];
      res.counterexample[dom] = acc;  // times den, but only signs matter
    }
    return res;
  }
  return res;
}

std::vector<PropertyCheck> validate_properties(const AdaptedDiagram& d) {
  std::vector<PropertyCheck> out;
  const int n = d.n();
  auto add = [&](const std::string& name, bool pass,
                 const std::string& details = "") {
    out.push_back({name, pass, details});
  };

  // (1) every elementary domain a rectangle or basepointed octagon
  {
    bool ok = true;
    std::string detail;
    int octs = 0;
    for (size_t i = 0; i < d.domains.size(); ++i) {
      const auto& dom = d.domains[i];
      bool rect = dom.corners == 4 && dom.octagon_face < 0 && dom.disk;
      bool oct = dom.corners == 8 && dom.octagon_face >= 0 && dom.disk &&
                 dom.basepoint >= 0;
      octs += oct ? 1 : 0;
      if (!rect && !oct) {
        ok = false;
        detail = "domain " + std::to_string(i) + " bad";
      }
    }
    if (octs != 2 * n) {
      ok = false;
      detail = "octagon count " + std::to_string(octs);
    }
    add("P1-rectangles-and-octagons", ok, detail);
  }

  // (2) pants decompositions with one octagon each
  for (int family = 0; family < 2; ++family) {
    UF uf(static_cast<int>(d.surf.faces.size()));
    for (int e = 0; e < d.surf.edge_count(); ++e) {
      const auto& lift = d.lifts[d.lift_of_edge[e]];
      if (lift.selected && lift.family == family) continue;
      uf.unite(d.surf.edge_faces[e][0], d.surf.edge_faces[e][1]);
    }
    std::vector<int> fcount(d.surf.faces.size(), 0),
        vcount(d.surf.faces.size(), 0), ecount(d.surf.faces.size(), 0),
        octcount(d.surf.faces.size(), 0);
    for (size_t f = 0; f < d.surf.faces.size(); ++f) {
      int r = uf.find(static_cast<int>(f));
      ++fcount[r];
      if (d.surf.faces[f].octagon) ++octcount[r];
    }
    for (int e = 0; e < d.surf.edge_count(); ++e) {
      const auto& lift = d.lifts[d.lift_of_edge[e]];
      if (lift.selected && lift.family == family) continue;
      ++ecount[uf.find(d.surf.edge_faces[e][0])];
    }
    for (int v = 0; v < d.surf.vertex_count(); ++v) {
      // interior vertex of a component: not on a selected curve of family
      int px = (v / 3) % d.surf.N, py = (v / 3) / d.surf.N;
      uint8_t s = static_cast<uint8_t>(v % 3);
      int le = d.surf.eid(family, px, py, s);
      const auto& lift = d.lifts[d.lift_of_edge[le]];
      if (lift.selected && lift.family == family) continue;
      ++vcount[uf.find(d.surf.vertex_quadrant[v][0])];
    }
    bool ok = true;
    std::string detail;
    int comps = 0;
    for (size_t r = 0; r < d.surf.faces.size(); ++r) {
      if (fcount[r] == 0 || uf.find(static_cast<int>(r)) != static_cast<int>(r))
        continue;
      ++comps;
      int chi = vcount[r] - ecount[r] + fcount[r];
      if (chi != -1) {
        ok = false;
        detail = "component chi=" + std::to_string(chi);
      }
      if (octcount[r] != 1) {
        ok = false;
        detail = "component octagons=" + std::to_string(octcount[r]);
      }
    }
    if (comps != 2 * n) {
      ok = false;
      detail = "components=" + std::to_string(comps);
    }
    add(family == 0 ? "P2-alpha-pants" : "P2-beta-pants", ok, detail);
  }

  // (3) intersection counts at most 2; doubles only new-new, with equal
  // signs. Pairs of old-curve lifts over the same grid crossing can miss
  // each other entirely (only 3 points sit over the crossing, the four
  // selected lifts pass through two each), so zero counts are reported as
  // a finding, not a failure.
  {
    bool ok = true;
    std::string detail;
    int zero_pairs = 0;
    for (size_t a = 0; a < d.alpha.size() && ok; ++a)
      for (size_t b = 0; b < d.beta.size() && ok; ++b) {
        int cnt = d.pair_count(static_cast<int>(a), static_cast<int>(b));
        bool anew = d.lifts[d.alpha[a]].is_new;
        bool bnew = d.lifts[d.beta[b]].is_new;
        if (cnt == 0) {
          ++zero_pairs;
          if (anew && bnew) {
            ok = false;
            detail = "new-new pair with no intersection";
          }
        } else if (cnt != 1 && cnt != 2) {
          ok = false;
          detail = "pair (" + std::to_string(a) + "," + std::to_string(b) +
                   ") meets " + std::to_string(cnt) + " times";
        } else if (cnt == 2 && !(anew && bnew)) {
          ok = false;
          detail = "double intersection on a pair with an old curve";
        } else if (cnt == 2) {
          // Curve orientations are pulled back through the projection, so
          // every lift traverses its edges in the +x/+y direction and each
          // crossing has sign +1; a sign mismatch would show up as a
          // reversed edge in one of the lifts.
          auto sign = [&](int cid) {
            const Crossing& c = d.crossings[cid];
            int ha = d.surf.eid(0, c.px, c.py, c.sheet);
            int vb = d.surf.eid(1, c.px, c.py, c.sheet);
            const auto& la = d.lifts[d.lift_of_edge[ha]].edges;
            const auto& lb = d.lifts[d.lift_of_edge[vb]].edges;
            bool fa = std::find(la.begin(), la.end(), ha) != la.end();
            bool fb = std::find(lb.begin(), lb.end(), vb) != lb.end();
            return fa && fb ? +1 : -1;
          };
          if (sign(d.pair_points[a][b][0]) != sign(d.pair_points[a][b][1])) {
            ok = false;
            detail = "double intersection with opposite signs";
          }
        }
      }
    if (ok && zero_pairs > 0)
      detail = "finding: " + std::to_string(zero_pairs) +
               " disjoint old-curve pairs";
    add("P3-intersection-counts-and-signs", ok, detail);
  }

  // (4) projection degree of generators: selected lifts per downstairs curve
  {
    bool ok = true;
    std::string detail;
    for (int family = 0; family < 2 && ok; ++family)
      for (int line = 0; line < d.surf.N && ok; ++line) {
        int sel = 0;
        for (const auto& lift : d.lifts)
          if (lift.family == family && lift.line == line && lift.selected)
            ++sel;
        int want = line % 2 == 0 ? 2 : 1;
        if (sel != want) {
          ok = false;
          detail = "line " + std::to_string(line) + " has " +
                   std::to_string(sel) + " selected lifts";
        }
      }
    add("P4-projection-degree", ok, detail);
  }

  // (5) one or two intersection points over every extended-grid crossing
  {
    bool ok = true;
    std::string detail;
    for (int py = 0; py < d.surf.N && ok; ++py)
      for (int px = 0; px < d.surf.N && ok; ++px) {
        int cnt = 0;
        for (uint8_t s = 0; s < 3; ++s)
          if (d.crossing_at_vertex[d.surf.vid(px, py, s)] >= 0) ++cnt;
        if (cnt != 1 && cnt != 2) {
          ok = false;
          detail = "grid vertex (" + std::to_string(px) + "," +
                   std::to_string(py) + ") carries " + std::to_string(cnt) +
                   " points";
        }
      }
    add("P5-points-over-grid-crossings", ok, detail);
  }

  // (6) admissibility of the periodic lattice. The lattice rank is
  // b_1(Y) + (2n-1): multi-pointed diagrams add the differences of the
  // alpha- and beta-pants classes through each basepoint.
  {
    auto lattice = periodic_lattice(d);
    auto adm = check_admissibility(d, lattice);
    long long b1 = static_cast<long long>(lattice.size()) - (2 * n - 1);
    add("P6-admissibility", adm.admissible,
        adm.admissible ? "lattice rank " + std::to_string(lattice.size()) +
                             " (b1 = " + std::to_string(b1) + ")"
                       : "non-negative periodic domain found");
  }

  // Structural counts (Riemann-Hurwitz, curve counts, basepoints).
  {
    bool ok = d.surf.euler_characteristic() == -2 * n &&
              d.surf.genus() == n + 1 &&
              static_cast<int>(d.alpha.size()) == 3 * n &&
              static_cast<int>(d.beta.size()) == 3 * n &&
              static_cast<int>(d.basepoints.size()) == 2 * n;
    add("counts-genus-curves-basepoints", ok);
  }
  // Projection degree 3 with branching over every face.
  {
    bool ok = true;
    std::vector<int> deg(d.eg.faces(), 0);
    for (const auto& f : d.surf.faces)
      deg[d.eg.face_id(f.px, f.py)] += f.octagon ? 2 : 1;
    for (int v : deg)
      if (v != 3) ok = false;
    add("projection-degree-3", ok);
  }
  return out;
}

bool all_pass(const std::vector<PropertyCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string canonical_form(const AdaptedDiagram& d) {
  const int N = d.surf.N;
  // Tree gauge: vertex (0,0) anchored, rows chained along H edges, column 0
  // chained along V edges. The residual freedom is one global conjugation.
  std::vector<S3> u(N * N);
  auto uat = [&](int px, int py) -> S3& { return u[py * N + px]; };
  uat(0, 0) = S3::identity();
  for (int py = 0; py < N; ++py) {
    if (py > 0)
      uat(0, py) = uat(0, py - 1) * d.coc.vedge(0, py - 1).inverse();
    for (int px = 1; px < N; ++px)
      uat(px, py) = uat(px - 1, py) * d.coc.hedge(px - 1, py).inverse();
  }
  std::string best;
  for (uint8_t w = 0; w < 6; ++w) {
    S3 conj(w);
    std::ostringstream s;
    s << d.eg.n() << "|" << sides_string(d.eg) << "|";
    for (int i = 0; i < d.eg.n(); ++i)
      s << d.eg.base.xcol[i] << "," << d.eg.base.ocol[i] << ";";
    s << (d.endcircle == EndcircleConvention::Top ? "T" : "B") << "|";
    for (int py = 0; py < N; ++py)
      for (int px = 0; px < N; ++px) {
        int qx = (px + 1) % N, qy = (py + 1) % N;
        S3 gh = uat(qx, py) * d.coc.hedge(px, py) * uat(px, py).inverse();
        S3 gv = uat(px, qy) * d.coc.vedge(px, py) * uat(px, py).inverse();
        s << int((conj * gh * conj.inverse()).index());
        s << int((conj * gv * conj.inverse()).index());
      }
    std::string cand = s.str();
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

}  // namespace hftwo
