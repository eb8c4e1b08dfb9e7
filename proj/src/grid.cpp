#include "hftwo/grid.hpp"

#include <algorithm>
#include <sstream>

namespace hftwo {

std::vector<int> GridSpec::xrow() const {
  std::vector<int> r(n, -1);
  for (int i = 0; i < n; ++i) r[xcol[i]] = i;
  return r;
}

std::vector<int> GridSpec::orow() const {
  std::vector<int> r(n, -1);
  for (int i = 0; i < n; ++i) r[ocol[i]] = i;
  return r;
}

std::optional<GridError> validate_grid(const GridSpec& g) {
  if (g.n <= 0) return GridError{"grid size must be positive"};
  if ((int)g.xcol.size() != g.n || (int)g.ocol.size() != g.n)
    return GridError{"X/O row count does not match n"};
  for (auto* v : {&g.xcol, &g.ocol}) {
    std::vector<bool> seen(g.n, false);
    for (int c : *v) {
      if (c < 0 || c >= g.n)
        return GridError{"marker column out of range"};
      if (seen[c])
        return GridError{std::string(v == &g.xcol ? "X" : "O") +
                         " columns are not a permutation"};
      seen[c] = true;
    }
  }
  for (int i = 0; i < g.n; ++i)
    if (g.xcol[i] == g.ocol[i])
      return GridError{"X and O share a cell in row " + std::to_string(i + 1)};
  return std::nullopt;
}

namespace {

bool parse_int_list(const std::string& s, std::vector<int>& out) {
  std::istringstream in(s);
  int v;
  while (in >> v) out.push_back(v);
  return in.eof();
}

}  // namespace

std::optional<ParsedGrid> parse_grid(const std::string& text, GridError& err) {
  ParsedGrid res;
  res.grid.n = -1;
  std::vector<int> xs, os;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      err = {"line " + std::to_string(lineno) + ": expected key=value"};
      return std::nullopt;
    }
    std::string key = line.substr(first, eq - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t'))
      key.pop_back();
    std::string val = line.substr(eq + 1);
    if (key == "n") {
      try {
        res.grid.n = std::stoi(val);
      } catch (...) {
        err = {"bad n value"};
        return std::nullopt;
      }
    } else if (key == "X") {
      if (!parse_int_list(val, xs)) {
        err = {"bad X list"};
        return std::nullopt;
      }
    } else if (key == "O") {
      if (!parse_int_list(val, os)) {
        err = {"bad O list"};
        return std::nullopt;
      }
    } else if (key == "sides") {
      for (char c : val)
        if (c != ' ' && c != '\t' && c != '\r') res.sides.push_back(c);
    } else {
      err = {"unknown key '" + key + "'"};
      return std::nullopt;
    }
  }
  if (res.grid.n <= 0) {
    err = {"missing or invalid n"};
    return std::nullopt;
  }
  for (int v : xs) res.grid.xcol.push_back(v - 1);
  for (int v : os) res.grid.ocol.push_back(v - 1);
  if (auto e = validate_grid(res.grid)) {
    err = *e;
    return std::nullopt;
  }
  if (!res.sides.empty() && (int)res.sides.size() != 2 * res.grid.n) {
    err = {"sides must have 2n letters"};
    return std::nullopt;
  }
  return res;
}

std::string format_grid(const GridSpec& g, const std::string& sides) {
  std::ostringstream out;
  out << "n=" << g.n << "\nX=";
  for (int i = 0; i < g.n; ++i) out << (i ? " " : "") << g.xcol[i] + 1;
  out << "\nO=";
  for (int i = 0; i < g.n; ++i) out << (i ? " " : "") << g.ocol[i] + 1;
  out << "\n";
  if (!sides.empty()) out << "sides=" << sides << "\n";
  return out.str();
}

int LinkTrace::component_of_row(int row) const {
  for (int c = 0; c < (int)components.size(); ++c)
    for (int r : components[c])
      if (r == row) return c;
  return -1;
}

LinkTrace trace_link(const GridSpec& g) {
  LinkTrace t;
  const int n = g.n;
  auto orow = g.orow();
  std::vector<bool> used(n, false);
  for (int start = 0; start < n; ++start) {
    if (used[start]) continue;
    std::vector<int> comp;
    int r = start;
    do {
      used[r] = true;
      comp.push_back(r);
      r = orow[g.xcol[r]];
    } while (r != start);
    t.components.push_back(std::move(comp));
  }
  auto xrow = g.xrow();
  // Segments are drawn inside the cut-open square: the row segment of row i
  // joins its O and X directly, the column segment of column j joins its X
  // and O directly. Vertical crosses over horizontal.
  for (int j = 0; j < n; ++j) {
    int rlo = std::min(xrow[j], orow[j]), rhi = std::max(xrow[j], orow[j]);
    for (int i = 0; i < n; ++i) {
      int clo = std::min(g.ocol[i], g.xcol[i]);
      int chi = std::max(g.ocol[i], g.xcol[i]);
      if (clo < j && j < chi && rlo < i && i < rhi)
        t.crossings.emplace_back(j, i);
    }
  }
  return t;
}

std::string default_sides(int n) {
  return std::string(n, 'D') + std::string(n, 'L');
}

std::string sides_string(const ExtendedGrid& eg) {
  std::string s;
  for (int i = 0; i < eg.n(); ++i) s.push_back(eg.hside[i] ? 'D' : 'U');
  for (int j = 0; j < eg.n(); ++j) s.push_back(eg.vside[j] ? 'L' : 'R');
  return s;
}

std::optional<ExtendedGrid> extend_grid(const GridSpec& g,
                                        const std::string& sides,
                                        GridError& err) {
  if (auto e = validate_grid(g)) {
    err = *e;
    return std::nullopt;
  }
  const int n = g.n;
  std::string s = sides.empty() ? default_sides(n) : sides;
  if ((int)s.size() != 2 * n) {
    err = {"sides must have 2n letters"};
    return std::nullopt;
  }
  ExtendedGrid eg;
  eg.base = g;
  eg.hside.resize(n);
  eg.vside.resize(n);
  for (int i = 0; i < n; ++i) {
    char c = s[i];
    if (c != 'U' && c != 'D') {
      err = {"horizontal side letters must be U or D"};
      return std::nullopt;
    }
    eg.hside[i] = (c == 'D');
  }
  for (int j = 0; j < n; ++j) {
    char c = s[n + j];
    if (c != 'L' && c != 'R') {
      err = {"vertical side letters must be L or R"};
      return std::nullopt;
    }
    eg.vside[j] = (c == 'L');
  }
  eg.marker_at_face.assign(eg.faces(), -1);
  for (int i = 0; i < n; ++i) {
    for (bool is_x : {true, false}) {
      Marker m;
      m.row = i;
      m.col = is_x ? g.xcol[i] : g.ocol[i];
      m.is_x = is_x;
      bool x_low = eg.hside[i], x_left = eg.vside[m.col];
      bool low = is_x ? x_low : !x_low;
      bool left = is_x ? x_left : !x_left;
      m.py = 2 * i + (low ? 0 : 1);
      m.px = 2 * m.col + (left ? 0 : 1);
      int id = (int)eg.markers.size();
      eg.markers.push_back(m);
      eg.marker_at_face[eg.face_id(m.px, m.py)] = id;
    }
  }
  return eg;
}

}  // namespace hftwo
