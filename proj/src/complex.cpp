#include "hftwo/complex.hpp"

#include <json.hpp>
#include <map>

#include "hftwo/gf2.hpp"

namespace hftwo {

using json = nlohmann::ordered_json;

std::optional<ChainComplexU2> complex_from_json(const std::string& text,
                                                std::string& err) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || j.value("format", "") != "hftwo-complex") {
    err = "not an hftwo-complex file";
    return std::nullopt;
  }
  ChainComplexU2 c;
  for (auto& g : j["generators"]) c.gens.push_back(g.get<std::string>());
  c.boundary.resize(c.gens.size());
  for (auto& t : j["boundary"]) {
    int from = t["from"].get<int>(), to = t["to"].get<int>();
    int up = t["upower"].get<int>();
    if (from < 0 || from >= c.size() || to < 0 || to >= c.size() ||
        (up != 0 && up != 1)) {
      err = "bad boundary term";
      return std::nullopt;
    }
    c.boundary[from].emplace_back(to, up);
  }
  return c;
}

std::string complex_to_json(const ChainComplexU2& c) {
  json j;
  j["format"] = "hftwo-complex";
  j["generators"] = c.gens;
  json terms = json::array();
  for (int i = 0; i < c.size(); ++i)
    for (auto [to, up] : c.boundary[i])
      terms.push_back({{"from", i}, {"to", to}, {"upower", up}});
  j["boundary"] = terms;
  if (!c.sector.empty()) j["sector"] = c.sector;
  return j.dump(1);
}

std::optional<DSquaredWitness> verify_d_squared(const ChainComplexU2& c) {
  for (int x = 0; x < c.size(); ++x) {
    std::map<std::pair<int, int>, int> acc;  // (target, upower) -> count
    for (auto [y, w1] : c.boundary[x])
      for (auto [z, w2] : c.boundary[y]) {
        int w = w1 + w2;
        if (w >= 2) continue;  // U^2 = 0
        acc[{z, w}] ^= 1;
      }
    for (auto& [key, parity] : acc)
      if (parity) return DSquaredWitness{x, key.first, key.second};
  }
  return std::nullopt;
}

HomologyReport homology(const ChainComplexU2& c) {
  const int g = c.size();
  const int dim = 2 * g;  // basis x_0..x_{g-1}, Ux_0..Ux_{g-1}
  // Boundary matrix, columns = basis images.
  GF2Matrix m(dim, dim);
  for (int x = 0; x < g; ++x)
    for (auto [y, w] : c.boundary[x]) {
      // d(x) has U^w y; d(Ux) keeps only w=0 terms as Uy.
      m.set(w == 0 ? y : g + y, x, !m.get(w == 0 ? y : g + y, x));
      if (w == 0) m.set(g + y, g + x, !m.get(g + y, g + x));
    }
  // Row-reduce a copy to find rank and a kernel basis.
  GF2Matrix red = m;
  std::vector<int> pivot_row_of_col(dim, -1);
  int rank = 0;
  for (int col = 0; col < dim && rank < dim; ++col) {
    int pr = -1;
    for (int r = rank; r < dim; ++r)
      if (red.get(r, col)) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != rank)
      for (int cc = 0; cc < dim; ++cc) {
        bool a = red.get(rank, cc), b = red.get(pr, cc);
        red.set(rank, cc, b);
        red.set(pr, cc, a);
      }
    for (int r = 0; r < dim; ++r)
      if (r != rank && red.get(r, col)) red.xor_rows(r, rank);
    pivot_row_of_col[col] = rank;
    ++rank;
  }
  HomologyReport rep;
  long long h = dim - 2LL * rank;
  rep.rank = h;
  // Kernel basis vectors.
  std::vector<std::vector<int>> kernel;
  for (int col = 0; col < dim; ++col) {
    if (pivot_row_of_col[col] >= 0) continue;
    std::vector<int> v(dim, 0);
    v[col] = 1;
    for (int c2 = 0; c2 < dim; ++c2)
      if (pivot_row_of_col[c2] >= 0 && red.get(pivot_row_of_col[c2], col))
        v[c2] = 1;
    kernel.push_back(std::move(v));
  }
  // rank of induced U on homology = rank([U ker | im]) - rank(im).
  int nk = static_cast<int>(kernel.size());
  GF2Matrix span(nk + dim, dim);
  for (int k = 0; k < nk; ++k)
    for (int i = 0; i < g; ++i)
      if (kernel[k][i]) span.set(k, g + i);  // U maps x_i to Ux_i
  for (int col = 0; col < dim; ++col)
    for (int r = 0; r < dim; ++r)
      if (m.get(r, col)) span.set(nk + col, r);
  GF2Matrix img(dim, dim);
  for (int col = 0; col < dim; ++col)
    for (int r = 0; r < dim; ++r)
      if (m.get(r, col)) img.set(col, r);
  long long urank = span.rank() - img.rank();
  rep.free_summands = urank;
  rep.f2_summands = h - 2 * urank;
  return rep;
}

HomologyReport lemma23_reduce(const HomologyReport& r, int k) {
  HomologyReport out = r;
  out.reduced = true;
  long long factor = 1;
  for (int i = 1; i < k; ++i) factor *= 2;
  out.divisible = r.rank % factor == 0 && r.free_summands % factor == 0 &&
                  r.f2_summands % factor == 0;
  if (out.divisible) {
    out.reduced_rank = r.rank / factor;
    out.reduced_free = r.free_summands / factor;
    out.reduced_f2 = r.f2_summands / factor;
  }
  return out;
}

SectorBuild build_sector_complex(const AdaptedDiagram& d,
                                 const Generator& seed,
                                 unsigned long long budget) {
  SectorBuild out;
  SectorTable table(d);
  std::string label = table.sector_of(d, seed);
  std::vector<Generator> members;
  unsigned long long streamed = 0;
  bool over = false;
  enumerate_generators(d, [&](const Generator& x) {
    if (++streamed > budget) {
      over = true;
      return false;
    }
    if (table.sector_of(d, x) == label) members.push_back(x);
    return true;
  });
  out.streamed = streamed;
  if (over) {
    out.skipped_budget = true;
    return out;
  }
  ChainComplexU2 c;
  c.sector = label;
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < members.size(); ++i) {
    index[members[i].point_on_alpha] = static_cast<int>(i);
    c.gens.push_back(generator_key(members[i]));
  }
  c.boundary.resize(members.size());
  DifferentialEngine engine(d);
  for (size_t i = 0; i < members.size(); ++i) {
    auto terms = engine.enumerate(members[i]);
    std::map<std::pair<int, int>, int> acc;
    for (const auto& t : terms) {
      auto it = index.find(t.y.point_on_alpha);
      if (it == index.end())
        throw std::runtime_error("differential left its sector");
      acc[{it->second, t.upower}] ^= 1;
    }
    for (auto& [key, parity] : acc)
      if (parity) c.boundary[i].emplace_back(key.first, key.second);
  }
  out.complex = std::move(c);
  return out;
}

}  // namespace hftwo
