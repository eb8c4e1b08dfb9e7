#include "hftwo/monodromy.hpp"

#include <algorithm>
#include <sstream>

namespace hftwo {

std::optional<Monodromy> parse_sigma(const std::string& text, int n,
                                     std::string& err) {
  Monodromy m;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool ok = false;
    S3 t = parse_transposition(tok, ok);
    if (!ok) {
      err = "bad transposition '" + tok + "'";
      return std::nullopt;
    }
    m.sigma.push_back(t);
  }
  if ((int)m.sigma.size() != n) {
    err = "expected " + std::to_string(n) + " transpositions";
    return std::nullopt;
  }
  return m;
}

std::string sigma_string(const Monodromy& m) {
  std::string s;
  for (size_t j = 0; j < m.sigma.size(); ++j) {
    if (j) s += " ";
    s += m.sigma[j].str();
  }
  return s;
}

MarkerBranching marker_transpositions(const ExtendedGrid& eg,
                                      const Monodromy& m) {
  MarkerBranching mb;
  mb.tau.reserve(eg.markers.size());
  for (const Marker& mk : eg.markers) mb.tau.push_back(m.sigma[mk.col]);
  return mb;
}

std::optional<WirtingerFailure> validate_wirtinger(const GridSpec& g,
                                                   const Monodromy& m) {
  const int n = g.n;
  auto xrow = g.xrow();
  auto orow = g.orow();
  for (int i = 0; i < n; ++i) {
    S3 cur = m.sigma[g.ocol[i]];
    int dir = g.xcol[i] > g.ocol[i] ? 1 : -1;
    for (int j = g.ocol[i] + dir; j != g.xcol[i]; j += dir) {
      int rlo = std::min(xrow[j], orow[j]), rhi = std::max(xrow[j], orow[j]);
      if (rlo < i && i < rhi) cur = cur.conjugate_by(m.sigma[j]);
    }
    if (cur != m.sigma[g.xcol[i]]) {
      WirtingerFailure f;
      f.row = i;
      f.computed = cur;
      f.expected = m.sigma[g.xcol[i]];
      f.message = "row " + std::to_string(i + 1) + ": walked " + cur.str() +
                  " != " + f.expected.str();
      return f;
    }
  }
  return std::nullopt;
}

std::optional<TransitivityFailure> validate_transitive(const Monodromy& m) {
  int parent[3] = {0, 1, 2};
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (S3 t : m.sigma)
    for (uint8_t s = 0; s < 3; ++s)
      if (t(s) != s) parent[find(s)] = find(t(s));
  if (find(0) == find(1) && find(1) == find(2)) return std::nullopt;
  TransitivityFailure f;
  for (int root = 0; root < 3; ++root) {
    std::vector<int> orbit;
    for (int s = 0; s < 3; ++s)
      if (find(s) == root) orbit.push_back(s + 1);
    if (!orbit.empty()) f.orbits.push_back(orbit);
  }
  std::ostringstream msg;
  msg << "sheets not transitive; orbits:";
  for (auto& o : f.orbits) {
    msg << " {";
    for (size_t k = 0; k < o.size(); ++k) msg << (k ? "," : "") << o[k];
    msg << "}";
  }
  f.message = msg.str();
  return f;
}

std::vector<Monodromy> enumerate_monodromies(const GridSpec& g) {
  const int n = g.n;
  const S3 trans[3] = {S3(1), S3(2), S3(3)};  // (12) < (13) < (23)
  std::vector<Monodromy> out;
  Monodromy m;
  m.sigma.assign(n, S3(1));
  std::vector<int> pick(n, 0);
  while (true) {
    for (int j = 0; j < n; ++j) m.sigma[j] = trans[pick[j]];
    if (!validate_wirtinger(g, m) && !validate_transitive(m))
      out.push_back(m);
    int j = n - 1;
    while (j >= 0 && pick[j] == 2) pick[j--] = 0;
    if (j < 0) break;
    ++pick[j];
  }
  return out;
}

}  // namespace hftwo
