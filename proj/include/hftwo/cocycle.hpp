#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hftwo/grid.hpp"
#include "hftwo/monodromy.hpp"
#include "hftwo/s3.hpp"

namespace hftwo {

// Sheet transport along the directed edges of the refined 2n x 2n grid.
// h(px,py): vertex (px,py) -> (px+1,py); v(px,py): (px,py) -> (px,py+1),
// indices mod 2n. Reversed edges carry inverses. Face holonomies are read
// counterclockwise from the face's lower-left corner.
struct TransitionCocycle {
  int N = 0;  // 2n
  std::vector<S3> h, v;

  S3 hedge(int px, int py) const { return h[py * N + px]; }
  S3 vedge(int px, int py) const { return v[py * N + px]; }
  S3& hedge(int px, int py) { return h[py * N + px]; }
  S3& vedge(int px, int py) { return v[py * N + px]; }

  S3 face_holonomy(int px, int py) const {
    int qx = (px + 1) % N, qy = (py + 1) % N;
    return vedge(px, py).inverse() * hedge(px, qy).inverse() * vedge(qx, py) *
           hedge(px, py);
  }
  // Transport once around the full horizontal circle at height py/2,
  // starting from vertex (0,py).
  S3 horizontal_circle(int py) const {
    S3 w;
    for (int px = 0; px < N; ++px) w = hedge(px, py) * w;
    return w;
  }
  S3 vertical_circle(int px) const {
    S3 w;
    for (int py = 0; py < N; ++py) w = vedge(px, py) * w;
    return w;
  }
};

struct CocycleError {
  std::string message;
};

// Builds the transport for the 3-fold cover branched at the markers:
// each edge picks up the transpositions of the column strands whose shadow
// it crosses, and the edges wrapping past the cut lines absorb the
// corrections that make every old curve's holonomy trivial. Face holonomies
// and old-circle holonomies are re-verified; a failure means the monodromy
// is inconsistent (unreachable after validate_wirtinger).
std::optional<TransitionCocycle> build_cocycle(const ExtendedGrid& eg,
                                               const MarkerBranching& mb,
                                               CocycleError& err);

// tau of the face (px,py): the marker's transposition or id.
S3 face_tau(const ExtendedGrid& eg, const MarkerBranching& mb, int px, int py);

}  // namespace hftwo
