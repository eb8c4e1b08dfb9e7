#include "hftwo/surface.hpp"

#include <sstream>

namespace hftwo {

int CoverSurface::edge_tail(int e) const {
  EdgeRef r = edge_ref(e);
  return vid(r.px, r.py, r.sheet);
}

int CoverSurface::edge_head(int e, const TransitionCocycle& c) const {
  EdgeRef r = edge_ref(e);
  uint8_t hs = (r.dir == 0 ? c.hedge(r.px, r.py) : c.vedge(r.px, r.py))(r.sheet);
  int hx = r.dir == 0 ? (r.px + 1) % N : r.px;
  int hy = r.dir == 0 ? r.py : (r.py + 1) % N;
  return vid(hx, hy, hs);
}

std::optional<CoverSurface> build_surface(const ExtendedGrid& eg,
                                          const MarkerBranching& mb,
                                          const TransitionCocycle& c,
                                          std::string& err) {
  CoverSurface s;
  s.n = eg.n();
  s.N = eg.size();
  const int N = s.N;
  s.edge_faces.assign(s.edge_count(), {-1, -1});
  s.vertex_quadrant.assign(s.vertex_count(), {-1, -1, -1, -1});

  // Walks the square's boundary ccw from the lower-left corner at the given
  // sheet; one loop for squares, two for octagons.
  auto add_face = [&](int px, int py, uint8_t s0, bool octagon) {
    CoverSurface::Face f;
    f.px = px;
    f.py = py;
    f.octagon = octagon;
    f.ll_sheet = s0;
    int qx = (px + 1) % N, qy = (py + 1) % N;
    uint8_t sh = s0;
    int loops = octagon ? 2 : 1;
    for (int k = 0; k < loops; ++k) {
      f.corner_vertex.push_back(s.vid(px, py, sh));
      f.boundary.emplace_back(s.eid(0, px, py, sh), false);
      sh = c.hedge(px, py)(sh);
      f.corner_vertex.push_back(s.vid(qx, py, sh));
      f.boundary.emplace_back(s.eid(1, qx, py, sh), false);
      sh = c.vedge(qx, py)(sh);
      // top edge traversed leftward: copy whose head sheet is sh
      uint8_t t = c.hedge(px, qy).inverse()(sh);
      f.corner_vertex.push_back(s.vid(qx, qy, sh));
      f.boundary.emplace_back(s.eid(0, px, qy, t), true);
      sh = t;
      uint8_t u = c.vedge(px, py).inverse()(sh);
      f.corner_vertex.push_back(s.vid(px, qy, sh));
      f.boundary.emplace_back(s.eid(1, px, py, u), true);
      sh = u;
    }
    if (sh != s0) {
      return false;  // boundary fails to close; holonomy inconsistent
    }
    int id = static_cast<int>(s.faces.size());
    for (size_t k = 0; k < f.boundary.size(); ++k) {
      auto [e, rev] = f.boundary[k];
      int side = rev ? 1 : 0;
      if (s.edge_faces[e][side] != -1) return false;
      s.edge_faces[e][side] = id;
      int v = f.corner_vertex[k];
      int quad = static_cast<int>(k % 4);  // NE,NW,SW,SE around the walk
      if (s.vertex_quadrant[v][quad] != -1) return false;
      s.vertex_quadrant[v][quad] = id;
    }
    s.faces.push_back(std::move(f));
    return true;
  };

  for (int py = 0; py < N; ++py)
    for (int px = 0; px < N; ++px) {
      S3 tau = face_tau(eg, mb, px, py);
      bool ok = true;
      if (tau.is_identity()) {
        for (uint8_t sh = 0; sh < 3; ++sh) ok = ok && add_face(px, py, sh, false);
      } else {
        uint8_t fixed = tau.fixed_sheet();
        ok = add_face(px, py, fixed, false);
        uint8_t a = fixed == 0 ? 1 : 0;
        ok = ok && add_face(px, py, a, true);
      }
      if (!ok) {
        std::ostringstream msg;
        msg << "cell gluing failed over face (" << px << "," << py << ")";
        err = msg.str();
        return std::nullopt;
      }
    }

  for (auto& ef : s.edge_faces)
    if (ef[0] < 0 || ef[1] < 0) {
      err = "dangling edge copy in cover complex";
      return std::nullopt;
    }
  for (auto& vq : s.vertex_quadrant)
    for (int q = 0; q < 4; ++q)
      if (vq[q] < 0) {
        err = "uncovered vertex quadrant in cover complex";
        return std::nullopt;
      }
  if (s.euler_characteristic() != -2 * s.n) {
    err = "Euler characteristic mismatch: got " +
          std::to_string(s.euler_characteristic()) + ", want " +
          std::to_string(-2 * s.n);
    return std::nullopt;
  }
  return s;
}

}  // namespace hftwo
