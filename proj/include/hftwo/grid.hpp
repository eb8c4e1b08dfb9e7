#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hftwo {

// Everything internal is 0-indexed; the text format is 1-indexed.
// Rows count bottom-to-top, columns left-to-right. Row i spans heights
// [i, i+1] on the torus, column j spans [j, j+1]; the torus identifies
// n with 0 in both directions.
struct GridSpec {
  int n = 0;
  std::vector<int> xcol;  // column of the X in each row
  std::vector<int> ocol;  // column of the O in each row

  std::vector<int> xrow() const;  // row of the X in each column
  std::vector<int> orow() const;

  bool operator==(const GridSpec&) const = default;
};

struct GridError {
  std::string message;
};

// Line-oriented text format, '#' comments:
//   n=<int>
//   X=<n ints>
//   O=<n ints>
//   sides=<2n letters, U/D then L/R>   (optional)
struct ParsedGrid {
  GridSpec grid;
  std::string sides;  // empty when absent
};

std::optional<ParsedGrid> parse_grid(const std::string& text, GridError& err);
std::string format_grid(const GridSpec& g, const std::string& sides = "");

// One step of the link: a row segment runs O->X rightward (with wraparound),
// a column segment X->O upward.
struct LinkTrace {
  // Marker sequence per component as row indices: the component visits
  // O(row r0) -> X(row r0) -> O(row r1) -> X(row r1) -> ... cyclically,
  // where r_{k+1} = orow[xcol[r_k]].
  std::vector<std::vector<int>> components;
  // (column j, row i): the vertical segment of column j crosses the
  // interior of the horizontal segment of row i.
  std::vector<std::pair<int, int>> crossings;

  int component_of_row(int row) const;  // component containing row-i markers
};

LinkTrace trace_link(const GridSpec& g);

// Cyclic rightward/upward distance: steps from a to b mod n.
inline int cyc_dist(int a, int b, int n) { return ((b - a) % n + n) % n; }

struct Marker {
  int row = 0, col = 0;
  bool is_x = false;
  int px = 0, py = 0;  // face of the extended grid holding the marker
};

// The 2n x 2n refined grid. Curve positions: even = old (integer heights),
// odd = new (half-integer). Face (px,py) spans [px/2,(px+1)/2] x
// [py/2,(py+1)/2]; vertex (px,py) is that face's lower-left corner.
// hside[i] = true places the X of row strip i below the new curve a_{i+1/2};
// vside[j] = true places the X of column strip j left of b_{j+1/2}.
struct ExtendedGrid {
  GridSpec base;
  std::vector<bool> hside, vside;
  std::vector<Marker> markers;        // 2n of them, X(0),O(0),X(1),O(1),...
  std::vector<int> marker_at_face;    // size 4n^2, -1 or marker index

  int n() const { return base.n; }
  int size() const { return 2 * base.n; }        // curves per direction
  int faces() const { return size() * size(); }  // 4n^2
  int face_id(int px, int py) const { return py * size() + px; }
  int marker_at(int px, int py) const { return marker_at_face[face_id(px, py)]; }
};

// sides: empty = all defaults (X down / X left), otherwise 2n letters
// (U/D for the n horizontal new curves, then L/R for the vertical ones).
std::optional<ExtendedGrid> extend_grid(const GridSpec& g,
                                        const std::string& sides,
                                        GridError& err);

// Canonical side strings, e.g. "DDLL" for n=2 defaults.
std::string default_sides(int n);
std::string sides_string(const ExtendedGrid& eg);

// Validates permutation/shared-cell invariants; parse_grid calls this.
std::optional<GridError> validate_grid(const GridSpec& g);

}  // namespace hftwo
