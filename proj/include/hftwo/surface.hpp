#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hftwo/cocycle.hpp"
#include "hftwo/grid.hpp"

namespace hftwo {

// The covering surface as a cell complex over the refined grid.
// Vertices: (px,py,sheet). Edge copies: (dir,px,py,tail sheet), where the
// copy of a rightward/upward edge with tail sheet s has head sheet g(e)(s).
// Faces: three squares over an unmarked face; over a marked face with
// tau=(ab), one octagon (sheets a,b merged, boundary traversing the square
// twice) and one square (the fixed sheet).
struct CoverSurface {
  struct Face {
    int px = 0, py = 0;
    bool octagon = false;
    uint8_t ll_sheet = 0;  // sheet at the lower-left corner (octagon: min one)
    std::vector<std::pair<int, bool>> boundary;  // (edge copy, reversed), ccw
    std::vector<int> corner_vertex;  // vertex starting each boundary entry
  };

  int n = 0, N = 0;
  std::vector<Face> faces;
  std::vector<std::array<int, 2>> edge_faces;  // copy -> {left, right} face
  // (vertex, quadrant NE=0,NW=1,SW=2,SE=3) -> face
  std::vector<std::array<int, 4>> vertex_quadrant;

  int vertex_count() const { return 3 * N * N; }
  int edge_count() const { return 6 * N * N; }
  int vid(int px, int py, uint8_t s) const { return (py * N + px) * 3 + s; }
  // dir 0 = horizontal (rightward), 1 = vertical (upward)
  int eid(int dir, int px, int py, uint8_t s) const {
    return (dir * N * N + py * N + px) * 3 + s;
  }
  struct EdgeRef {
    int dir, px, py;
    uint8_t sheet;
  };
  EdgeRef edge_ref(int e) const {
    EdgeRef r;
    r.sheet = static_cast<uint8_t>(e % 3);
    e /= 3;
    r.dir = e / (N * N);
    e %= N * N;
    r.py = e / N;
    r.px = e % N;
    return r;
  }
  int edge_tail(int e) const;
  int edge_head(int e, const TransitionCocycle& c) const;

  int euler_characteristic() const {
    return vertex_count() - edge_count() + static_cast<int>(faces.size());
  }
  int genus() const { return (2 - euler_characteristic()) / 2; }
};

std::optional<CoverSurface> build_surface(const ExtendedGrid& eg,
                                          const MarkerBranching& mb,
                                          const TransitionCocycle& c,
                                          std::string& err);

}  // namespace hftwo
