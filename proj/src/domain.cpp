#include "hftwo/domain.hpp"

#include <set>

namespace hftwo {

long long nw_of(const AdaptedDiagram& d, const DomainVector& dv) {
  long long s = 0;
  for (int dom : d.basepoints) s += dv[dom];
  return s;
}

bool is_nonnegative(const DomainVector& dv) {
  for (long long v : dv)
    if (v < 0) return false;
  return true;
}

bool is_embedded(const DomainVector& dv) {
  for (long long v : dv)
    if (v != 0 && v != 1) return false;
  return true;
}

std::array<long long, 4> quadrants_at(const AdaptedDiagram& d,
                                      const DomainVector& dv, int crossing) {
  std::array<long long, 4> q;
  for (int k = 0; k < 4; ++k) q[k] = dv[d.crossings[crossing].quad[k]];
  return q;
}

bool boundary_consistent(const AdaptedDiagram& d, const DomainVector& dv,
                         const Generator& x, const Generator& y) {
  std::vector<long long> want(d.crossings.size(), 0);
  for (int c : x.point_on_alpha) want[c] += 1;
  for (int c : y.point_on_alpha) want[c] -= 1;
  for (size_t c = 0; c < d.crossings.size(); ++c) {
    auto q = quadrants_at(d, dv, static_cast<int>(c));
    if (q[0] - q[1] + q[2] - q[3] != want[c]) return false;
  }
  return true;
}

DomainStats domain_stats(const AdaptedDiagram& d, const DomainVector& dv,
                         const Generator& x, const Generator& y) {
  DomainStats s;
  s.nonneg = is_nonnegative(dv);
  s.formula_extended = !s.nonneg;
  for (size_t i = 0; i < d.domains.size(); ++i)
    if (d.domains[i].octagon_face >= 0) s.e -= dv[i];
  for (int c : x.point_on_alpha) {
    auto q = quadrants_at(d, dv, c);
    long long m4 = q[0] + q[1] + q[2] + q[3];
    s.p4 += m4;
    if (m4 != 0) ++s.d_count;
  }
  for (int c : y.point_on_alpha) {
    auto q = quadrants_at(d, dv, c);
    s.p4 += q[0] + q[1] + q[2] + q[3];
  }
  s.mu4 = 4 * s.e + s.p4;
  s.delta4 = s.mu4 - 8 * s.e;
  s.chiS4 = 4 * s.d_count - s.delta4;
  s.branch4 = s.mu4 - 4 * s.e - 2 * s.d_count;
  s.nw = nw_of(d, dv);
  return s;
}

long long embedded_region_chi(const AdaptedDiagram& d,
                              const DomainVector& dv) {
  const auto& surf = d.surf;
  std::vector<char> face_in(surf.faces.size(), 0);
  for (size_t i = 0; i < d.domains.size(); ++i) {
    if (dv[i] == 0) continue;
    for (int f : d.domains[i].faces) face_in[f] = 1;
  }
  long long F = 0, E = 0, V = 0;
  for (char c : face_in) F += c;
  for (int e = 0; e < surf.edge_count(); ++e)
    if (face_in[surf.edge_faces[e][0]] || face_in[surf.edge_faces[e][1]]) ++E;
  for (int v = 0; v < surf.vertex_count(); ++v) {
    bool any = false;
    for (int q = 0; q < 4; ++q) any = any || face_in[surf.vertex_quadrant[v][q]];
    if (any) ++V;
  }
  return V - E + F;
}

}  // namespace hftwo
