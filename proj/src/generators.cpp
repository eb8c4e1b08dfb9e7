#include "hftwo/generators.hpp"

#include <algorithm>
#include <sstream>

namespace hftwo {

std::vector<int> points_by_beta(const AdaptedDiagram& d, const Generator& x) {
  std::vector<int> by_beta(d.beta.size(), -1);
  for (int c : x.point_on_alpha) by_beta[d.crossings[c].beta] = c;
  return by_beta;
}

bool is_valid_generator(const AdaptedDiagram& d, const Generator& x) {
  if (x.point_on_alpha.size() != d.alpha.size()) return false;
  std::vector<bool> used(d.beta.size(), false);
  for (size_t a = 0; a < x.point_on_alpha.size(); ++a) {
    int c = x.point_on_alpha[a];
    if (c < 0 || c >= d.num_crossings()) return false;
    if (d.crossings[c].alpha != static_cast<int>(a)) return false;
    if (used[d.crossings[c].beta]) return false;
    used[d.crossings[c].beta] = true;
  }
  return true;
}

std::string generator_key(const Generator& x) {
  std::ostringstream s;
  for (int c : x.point_on_alpha) s << c << ",";
  return s.str();
}

std::string u128_str(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

unsigned __int128 ryser_permanent(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  // Gray-code subset walk over columns.
  std::vector<long long> rowsum(n, 0);
  __int128 total = 0;
  uint64_t gray = 0;
  for (uint64_t k = 1; k < (1ULL << n); ++k) {
    uint64_t next = k ^ (k >> 1);
    uint64_t diff = gray ^ next;
    int col = __builtin_ctzll(diff);
    bool added = next & diff;
    for (int r = 0; r < n; ++r)
      rowsum[r] += added ? m[r][col] : -m[r][col];
    gray = next;
    __int128 prod = 1;
    for (int r = 0; r < n && prod != 0; ++r) prod *= rowsum[r];
    int bits = __builtin_popcountll(next);
    if ((n - bits) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return static_cast<unsigned __int128>(total);
}

namespace {

std::vector<std::vector<int>> pair_matrix(const AdaptedDiagram& d) {
  std::vector<std::vector<int>> m(d.alpha.size(),
                                  std::vector<int>(d.beta.size(), 0));
  for (size_t a = 0; a < d.alpha.size(); ++a)
    for (size_t b = 0; b < d.beta.size(); ++b)
      m[a][b] = d.pair_count(static_cast<int>(a), static_cast<int>(b));
  return m;
}

}  // namespace

unsigned __int128 permanent_count(const AdaptedDiagram& d) {
  return ryser_permanent(pair_matrix(d));
}

namespace {

struct Enumerator {
  const AdaptedDiagram& d;
  const std::function<bool(const Generator&)>* fn = nullptr;
  Generator cur;
  uint64_t used = 0;
  unsigned __int128 count = 0;
  bool stopped = false;

  bool walk(size_t a) {
    if (a == d.alpha.size()) {
      ++count;
      if (fn && !(*fn)(cur)) return false;
      return true;
    }
    for (size_t b = 0; b < d.beta.size(); ++b) {
      if (used & (1ULL << b)) continue;
      for (int c : d.pair_points[a][b]) {
        cur.point_on_alpha[a] = c;
        used |= 1ULL << b;
        bool go = walk(a + 1);
        used &= ~(1ULL << b);
        if (!go) return false;
      }
    }
    return true;
  }
};

}  // namespace

unsigned __int128 enumerate_generators(
    const AdaptedDiagram& d, const std::function<bool(const Generator&)>& fn) {
  Enumerator e{d, &fn, Generator{}, 0, 0, false};
  e.cur.point_on_alpha.assign(d.alpha.size(), -1);
  e.walk(0);
  return e.count;
}

unsigned __int128 count_generators_backtracking(const AdaptedDiagram& d) {
  Enumerator e{d, nullptr, Generator{}, 0, 0, false};
  e.cur.point_on_alpha.assign(d.alpha.size(), -1);
  e.walk(0);
  return e.count;
}

Generator sample_generator(const AdaptedDiagram& d, std::mt19937_64& rng) {
  const size_t na = d.alpha.size();
  Generator g;
  g.point_on_alpha.assign(na, -1);
  uint64_t used = 0;
  // Randomized-order backtracking; the first full matching is the sample.
  std::vector<std::vector<int>> options(na);
  std::function<bool(size_t)> walk = [&](size_t a) -> bool {
    if (a == na) return true;
    auto& opts = options[a];
    opts.clear();
    for (size_t b = 0; b < d.beta.size(); ++b) {
      if (used & (1ULL << b)) continue;
      for (int c : d.pair_points[a][b]) opts.push_back(c);
    }
    std::shuffle(opts.begin(), opts.end(), rng);
    for (int c : opts) {
      size_t b = d.crossings[c].beta;
      g.point_on_alpha[a] = c;
      used |= 1ULL << b;
      if (walk(a + 1)) return true;
      used &= ~(1ULL << b);
    }
    g.point_on_alpha[a] = -1;
    return false;
  };
  bool ok = walk(0);
  (void)ok;
  return g;
}

SectorTable::SectorTable(const AdaptedDiagram& d)
    : cr_(constraint_matrix(d)) {}

std::vector<long long> SectorTable::rhs(const AdaptedDiagram& d,
                                        const Generator& x,
                                        const Generator& y) const {
  std::vector<long long> b(d.crossings.size(), 0);
  for (int c : x.point_on_alpha) b[c] += 1;
  for (int c : y.point_on_alpha) b[c] -= 1;
  return b;
}

std::string SectorTable::sector_of(const AdaptedDiagram& d,
                                   const Generator& x) const {
  std::vector<long long> b(d.crossings.size(), 0);
  for (int c : x.point_on_alpha) b[c] += 1;
  auto r = cr_.residual(b);
  std::ostringstream s;
  for (long long v : r) s << v << ",";
  return s.str();
}

std::optional<std::vector<long long>> SectorTable::connecting_domain(
    const AdaptedDiagram& d, const Generator& x, const Generator& y) const {
  return cr_.solve(rhs(d, x, y));
}

}  // namespace hftwo
