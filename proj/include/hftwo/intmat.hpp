#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hftwo {

// Exact integer linear algebra on small dense systems via unimodular
// column reduction (Hermite-style echelon). All entries are checked
// against an overflow guard; the grids this library handles keep the
// numbers tiny.
class ColumnReduction {
 public:
  // A is row-major, rows x cols.
  ColumnReduction(const std::vector<std::vector<long long>>& a);

  int rank() const { return static_cast<int>(pivots_.size()); }
  int cols() const { return cols_; }
  int rows() const { return rows_; }

  // Canonical coset representative of b modulo the column space.
  // Two vectors are congruent mod colspace(A) iff residuals are equal.
  std::vector<long long> residual(const std::vector<long long>& b) const;

  // Some integer solution of A x = b, if one exists.
  std::optional<std::vector<long long>> solve(
      const std::vector<long long>& b) const;

  // Basis of the integer kernel {x : A x = 0}.
  std::vector<std::vector<long long>> kernel() const;

 private:
  int rows_ = 0, cols_ = 0;
  // Column-major storage: h_[j] is a column of the reduced matrix H with
  // A * u_ = H (u_ unimodular, column-major as well).
  std::vector<std::vector<long long>> h_, u_;
  std::vector<std::pair<int, int>> pivots_;  // (row, column of H)
};

}  // namespace hftwo
