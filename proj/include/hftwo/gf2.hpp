#pragma once

#include <cstdint>
#include <vector>

namespace hftwo {

// Dense F2 row vectors packed into 64-bit words.
class GF2Matrix {
 public:
  GF2Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64),
        data_(static_cast<size_t>(rows) * words_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, bool v = true) {
    uint64_t& w = data_[static_cast<size_t>(r) * words_ + c / 64];
    uint64_t m = 1ULL << (c % 64);
    if (v)
      w |= m;
    else
      w &= ~m;
  }
  bool get(int r, int c) const {
    return (data_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1;
  }
  void xor_rows(int dst, int src) {
    uint64_t* d = &data_[static_cast<size_t>(dst) * words_];
    const uint64_t* s = &data_[static_cast<size_t>(src) * words_];
    for (int w = 0; w < words_; ++w) d[w] ^= s[w];
  }

  // Rank by in-place elimination on a copy.
  int rank() const;

 private:
  int rows_, cols_, words_;
  std::vector<uint64_t> data_;
};

inline int GF2Matrix::rank() const {
  GF2Matrix m = *this;
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (m.get(r, c)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int w = 0; w < words_; ++w)
      std::swap(m.data_[static_cast<size_t>(pivot) * words_ + w],
                m.data_[static_cast<size_t>(rank) * words_ + w]);
    for (int r = 0; r < rows_; ++r)
      if (r != rank && m.get(r, c)) m.xor_rows(r, rank);
    ++rank;
  }
  return rank;
}

}  // namespace hftwo
