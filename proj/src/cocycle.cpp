#include "hftwo/cocycle.hpp"

#include <sstream>

namespace hftwo {

S3 face_tau(const ExtendedGrid& eg, const MarkerBranching& mb, int px,
            int py) {
  int m = eg.marker_at(px, py);
  return m < 0 ? S3::identity() : mb.tau[m];
}

std::optional<TransitionCocycle> build_cocycle(const ExtendedGrid& eg,
                                               const MarkerBranching& mb,
                                               CocycleError& err) {
  const int n = eg.n(), N = eg.size();
  TransitionCocycle c;
  c.N = N;
  c.h.assign(N * N, S3::identity());
  c.v.assign(N * N, S3::identity());

  // Column-strand shadows, drawn inside the cut-open square: the strand of
  // column j runs vertically from its X marker to its O marker at the X's
  // quarter position, jogging across the new vertical curve inside the O's
  // face just before arriving.
  auto xrow = eg.base.xrow();
  auto orow = eg.base.orow();
  for (int j = 0; j < n; ++j) {
    const Marker& mx = eg.markers[2 * xrow[j]];      // X of column j
    const Marker& mo = eg.markers[2 * orow[j] + 1];  // O of column j
    S3 s = mb.tau[2 * xrow[j]];
    int lo, hi;
    if (orow[j] > xrow[j]) {  // travels upward
      lo = mx.py + 1;
      hi = mo.py;
    } else {  // travels downward
      lo = mo.py + 1;
      hi = mx.py;
    }
    for (int L = lo; L <= hi; ++L)
      c.hedge(mx.px, L) = s * c.hedge(mx.px, L);
    c.vedge(2 * j + 1, mo.py) = s * c.vedge(2 * j + 1, mo.py);
  }

  auto tau = [&](int px, int py) { return face_tau(eg, mb, px, py); };

  // Wrap corrections: pin the x=0 and y=0 old circles to the identity and
  // push the defect through the faces of the wrap row/column.
  {
    S3 w;
    for (int py = 0; py + 1 < N; ++py) w = c.vedge(0, py) * w;
    c.vedge(0, N - 1) = w.inverse();
    for (int px = 0; px + 1 < N; ++px)
      c.vedge(px + 1, N - 1) = c.hedge(px, 0) * c.vedge(px, N - 1) *
                               tau(px, N - 1) * c.hedge(px, N - 1).inverse();
  }
  {
    S3 w;
    for (int px = 0; px + 1 < N; ++px) w = c.hedge(px, 0) * w;
    c.hedge(N - 1, 0) = w.inverse();
    for (int py = 0; py + 1 < N; ++py)
      c.hedge(N - 1, py + 1) = c.vedge(0, py) * c.hedge(N - 1, py) *
                               tau(N - 1, py).inverse() *
                               c.vedge(N - 1, py).inverse();
  }

  for (int py = 0; py < N; ++py)
    for (int px = 0; px < N; ++px)
      if (c.face_holonomy(px, py) != tau(px, py)) {
        std::ostringstream msg;
        msg << "face holonomy mismatch at (" << px << "," << py << "): got "
            << c.face_holonomy(px, py).str() << ", want "
            << tau(px, py).str();
        err = {msg.str()};
        return std::nullopt;
      }
  for (int i = 0; i < n; ++i) {
    if (!c.horizontal_circle(2 * i).is_identity()) {
      err = {"old horizontal circle " + std::to_string(i) +
             " has nontrivial holonomy " + c.horizontal_circle(2 * i).str()};
      return std::nullopt;
    }
    if (!c.vertical_circle(2 * i).is_identity()) {
      err = {"old vertical circle " + std::to_string(i) +
             " has nontrivial holonomy " + c.vertical_circle(2 * i).str()};
      return std::nullopt;
    }
  }
  return c;
}

}  // namespace hftwo
