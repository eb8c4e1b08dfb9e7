#include "hftwo/ratlp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hftwo {

namespace {

constexpr long long kGuard = 1LL << 61;

long long checked(__int128 v) {
  if (v >= kGuard || v <= -kGuard)
    throw std::overflow_error("rational lp overflow");
  return static_cast<long long>(v);
}

// Exact fraction with guarded arithmetic.
struct Frac {
  long long n = 0, d = 1;

  Frac() = default;
  Frac(long long num) : n(num), d(1) {}
  Frac(long long num, long long den) : n(num), d(den) { reduce(); }

  void reduce() {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(std::llabs(n), d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (d == 0) throw std::domain_error("zero denominator");
  }
  bool zero() const { return n == 0; }
  bool neg() const { return n < 0; }
  bool pos() const { return n > 0; }
};

Frac operator+(const Frac& a, const Frac& b) {
  long long g = std::gcd(a.d, b.d);
  long long ad = a.d / g;
  long long num = checked((__int128)a.n * (b.d / g) + (__int128)b.n * ad);
  long long den = checked((__int128)ad * b.d);
  return Frac(num, den);
}
Frac operator-(const Frac& a, const Frac& b) {
  return a + Frac(-b.n, b.d);
}
Frac operator*(const Frac& a, const Frac& b) {
  long long g1 = std::gcd(std::llabs(a.n), b.d);
  long long g2 = std::gcd(std::llabs(b.n), a.d);
  long long num = checked((__int128)(a.n / g1) * (b.n / g2));
  long long den = checked((__int128)(a.d / g2) * (b.d / g1));
  return Frac(num, den);
}
Frac operator/(const Frac& a, const Frac& b) {
  if (b.zero()) throw std::domain_error("division by zero");
  return a * Frac(b.d, b.n);
}
bool operator<(const Frac& a, const Frac& b) { return (a - b).neg(); }

}  // namespace

// Phase-I simplex with Bland's rule on { x free : a_i . x + c_i >= 0 }.
// Free variables are split into x+ - x-; every constraint gets a surplus
// slack and rows with positive right-hand side get artificials.
std::optional<RationalPoint> fm_feasible(
    const std::vector<LinearConstraint>& constraints, int nvars) {
  const int m = static_cast<int>(constraints.size());
  if (m == 0) {
    RationalPoint p;
    p.num.assign(nvars, 0);
    return p;
  }
  // Columns: x+ (nvars), x- (nvars), slacks (m), artificials (nart).
  int nart = 0;
  std::vector<int> art_col(m, -1);
  for (const auto& r : constraints)
    if (-r.c > 0) ++nart;
  const int cols = 2 * nvars + m + nart;
  std::vector<std::vector<Frac>> t(m, std::vector<Frac>(cols + 1));
  std::vector<int> basis(m);
  int art_seen = 0;
  for (int r = 0; r < m; ++r) {
    long long rhs = -constraints[r].c;  // a.x - s = -c
    int sign = rhs >= 0 ? 1 : -1;
    rhs *= sign;
    for (int j = 0; j < nvars; ++j) {
      t[r][j] = Frac(sign * constraints[r].a[j]);
      t[r][nvars + j] = Frac(-sign * constraints[r].a[j]);
    }
    t[r][2 * nvars + r] = Frac(-sign);  // surplus
    t[r][cols] = Frac(rhs);
    if (rhs > 0) {
      int ac = 2 * nvars + m + art_seen++;
      art_col[r] = ac;
      t[r][ac] = Frac(1);
      basis[r] = ac;
    } else {
      // slack coefficient is -sign; make it +1 so the slack can be basic
      if (sign > 0)
        for (int j = 0; j <= cols; ++j) t[r][j] = Frac(0) - t[r][j];
      basis[r] = 2 * nvars + r;
    }
  }
  // Phase-I objective: minimize the sum of artificials.
  std::vector<Frac> cost(cols + 1);
  for (int r = 0; r < m; ++r)
    if (art_col[r] >= 0)
      for (int j = 0; j <= cols; ++j) cost[j] = cost[j] - t[r][j];
  // cost[cols] = -(sum of artificial values) = -objective
  unsigned long long pivots = 0;
  while (true) {
    if (++pivots > 2'000'000ULL)
      throw std::runtime_error("simplex pivot budget exceeded");
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (cost[j].neg()) {
        enter = j;
        break;  // Bland: lowest index
      }
    if (enter < 0) break;
    int leave = -1;
    Frac best;
    for (int r = 0; r < m; ++r) {
      if (!t[r][enter].pos()) continue;
      Frac ratio = t[r][cols] / t[r][enter];
      if (leave < 0 || ratio < best ||
          (!(best < ratio) && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded: cannot happen in phase I
    Frac piv = t[leave][enter];
    for (int j = 0; j <= cols; ++j) t[leave][j] = t[leave][j] / piv;
    for (int r = 0; r < m; ++r) {
      if (r == leave || t[r][enter].zero()) continue;
      Frac f = t[r][enter];
      for (int j = 0; j <= cols; ++j)
        t[r][j] = t[r][j] - f * t[leave][j];
    }
    if (!cost[enter].zero()) {
      Frac f = cost[enter];
      for (int j = 0; j <= cols; ++j) cost[j] = cost[j] - f * t[leave][j];
    }
    basis[leave] = enter;
  }
  // Feasible iff every artificial is zero.
  for (int r = 0; r < m; ++r)
    if (basis[r] >= 2 * nvars + m && !t[r][cols].zero()) return std::nullopt;
  // Extract x = x+ - x-.
  std::vector<Frac> x(nvars);
  for (int r = 0; r < m; ++r) {
    if (basis[r] < nvars)
      x[basis[r]] = x[basis[r]] + t[r][cols];
    else if (basis[r] < 2 * nvars)
      x[basis[r] - nvars] = x[basis[r] - nvars] - t[r][cols];
  }
  RationalPoint p;
  long long den = 1;
  for (const auto& f : x) den = checked((__int128)den / std::gcd(den, f.d) * f.d);
  p.den = den;
  p.num.resize(nvars);
  for (int j = 0; j < nvars; ++j)
    p.num[j] = checked((__int128)x[j].n * (den / x[j].d));
  return p;
}

}  // namespace hftwo
