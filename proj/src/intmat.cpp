#include "hftwo/intmat.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace hftwo {

namespace {

constexpr long long kGuard = 1LL << 60;

long long checked(long long v) {
  if (v >= kGuard || v <= -kGuard)
    throw std::overflow_error("integer reduction overflow");
  return v;
}

// col_a -= q * col_b
void axpy(std::vector<long long>& a, const std::vector<long long>& b,
          long long q) {
  for (size_t i = 0; i < a.size(); ++i) a[i] = checked(a[i] - q * b[i]);
}

}  // namespace

ColumnReduction::ColumnReduction(
    const std::vector<std::vector<long long>>& a) {
  rows_ = static_cast<int>(a.size());
  cols_ = rows_ ? static_cast<int>(a[0].size()) : 0;
  h_.assign(cols_, std::vector<long long>(rows_, 0));
  u_.assign(cols_, std::vector<long long>(cols_, 0));
  for (int j = 0; j < cols_; ++j) {
    u_[j][j] = 1;
    for (int i = 0; i < rows_; ++i) h_[j][i] = a[i][j];
  }
  int next = 0;  // first unprocessed column
  for (int r = 0; r < rows_ && next < cols_; ++r) {
    // Euclidean elimination at row r over columns next..cols-1.
    while (true) {
      int best = -1;
      for (int j = next; j < cols_; ++j)
        if (h_[j][r] != 0 &&
            (best < 0 || std::llabs(h_[j][r]) < std::llabs(h_[best][r])))
          best = j;
      if (best < 0) break;
      bool others = false;
      for (int j = next; j < cols_; ++j) {
        if (j == best || h_[j][r] == 0) continue;
        long long q = h_[j][r] / h_[best][r];
        axpy(h_[j], h_[best], q);
        axpy(u_[j], u_[best], q);
        if (h_[j][r] != 0) others = true;
      }
      if (!others) {
        std::swap(h_[best], h_[next]);
        std::swap(u_[best], u_[next]);
        if (h_[next][r] < 0) {
          for (auto& x : h_[next]) x = -x;
          for (auto& x : u_[next]) x = -x;
        }
        pivots_.emplace_back(r, next);
        ++next;
        break;
      }
    }
  }
}

std::vector<long long> ColumnReduction::residual(
    const std::vector<long long>& b) const {
  std::vector<long long> r = b;
  for (auto [row, col] : pivots_) {
    long long p = h_[col][row];
    long long q = r[row] / p;
    if (r[row] % p < 0) q -= 1;  // Euclidean remainder in [0, p)
    if (q != 0)
      for (int i = 0; i < rows_; ++i) r[i] = checked(r[i] - q * h_[col][i]);
  }
  return r;
}

std::optional<std::vector<long long>> ColumnReduction::solve(
    const std::vector<long long>& b) const {
  std::vector<long long> r = b;
  std::vector<long long> coeff(cols_, 0);
  for (auto [row, col] : pivots_) {
    long long p = h_[col][row];
    if (r[row] % p != 0) return std::nullopt;
    long long q = r[row] / p;
    coeff[col] = q;
    if (q != 0)
      for (int i = 0; i < rows_; ++i) r[i] = checked(r[i] - q * h_[col][i]);
  }
  for (long long v : r)
    if (v != 0) return std::nullopt;
  std::vector<long long> x(cols_, 0);
  for (int j = 0; j < cols_; ++j)
    if (coeff[j] != 0)
      for (int k = 0; k < cols_; ++k)
        x[k] = checked(x[k] + coeff[j] * u_[j][k]);
  return x;
}

std::vector<std::vector<long long>> ColumnReduction::kernel() const {
  std::vector<std::vector<long long>> basis;
  for (int j = rank(); j < cols_; ++j) {
    bool zero = true;
    for (long long v : h_[j])
      if (v != 0) zero = false;
    assert(zero);
    (void)zero;
    basis.push_back(u_[j]);
  }
  return basis;
}

}  // namespace hftwo
