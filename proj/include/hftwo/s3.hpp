#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace hftwo {

namespace detail {
// Images of 0,1,2 under the six permutations. 0 = id, 1 = (01), 2 = (02),
// 3 = (12), 4 = (0 1 2) i.e. 0->1->2->0, 5 = (0 2 1).
inline constexpr uint8_t kS3Table[6][3] = {
    {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};

constexpr uint8_t s3_index_of(uint8_t a, uint8_t b, uint8_t c) {
  for (uint8_t i = 0; i < 6; ++i)
    if (kS3Table[i][0] == a && kS3Table[i][1] == b && kS3Table[i][2] == c)
      return i;
  return 0;
}
}  // namespace detail

// Elements of the symmetric group on the three sheets {0,1,2}.
// Sheets print 1-based, so (01) prints as "12".
class S3 {
 public:
  constexpr S3() : idx_(0) {}
  constexpr explicit S3(uint8_t idx) : idx_(idx) {}

  static constexpr S3 identity() { return S3(0); }
  static constexpr S3 from_images(uint8_t a, uint8_t b, uint8_t c) {
    return S3(detail::s3_index_of(a, b, c));
  }
  // Transposition swapping sheets a and b (0-based, a != b).
  static constexpr S3 transposition(uint8_t a, uint8_t b) {
    uint8_t img[3] = {0, 1, 2};
    img[a] = b;
    img[b] = a;
    return from_images(img[0], img[1], img[2]);
  }

  constexpr uint8_t index() const { return idx_; }
  constexpr uint8_t apply(uint8_t sheet) const {
    return detail::kS3Table[idx_][sheet];
  }
  constexpr uint8_t operator()(uint8_t sheet) const { return apply(sheet); }

  // (f * g)(s) = f(g(s)).
  friend constexpr S3 operator*(S3 f, S3 g) {
    return from_images(f(g(0)), f(g(1)), f(g(2)));
  }
  constexpr S3 inverse() const {
    uint8_t img[3] = {0, 0, 0};
    for (uint8_t s = 0; s < 3; ++s) img[apply(s)] = s;
    return from_images(img[0], img[1], img[2]);
  }
  constexpr S3 conjugate_by(S3 g) const { return g * (*this) * g.inverse(); }

  constexpr bool is_identity() const { return idx_ == 0; }
  constexpr bool is_transposition() const { return idx_ >= 1 && idx_ <= 3; }
  // For a transposition, the sheet it fixes.
  constexpr uint8_t fixed_sheet() const {
    for (uint8_t s = 0; s < 3; ++s)
      if (apply(s) == s && !is_identity()) return s;
    return 3;
  }

  constexpr bool operator==(const S3&) const = default;
  constexpr auto operator<=>(const S3&) const = default;

  std::string str() const {
    switch (idx_) {
      case 0: return "id";
      case 1: return "12";
      case 2: return "13";
      case 3: return "23";
      case 4: return "123";
      default: return "132";
    }
  }

 private:
  uint8_t idx_;
};

// Parses a transposition written as two distinct 1-based sheet digits
// ("12", "13", "23", order-insensitive). Sets ok=false on bad input.
inline S3 parse_transposition(const std::string& text, bool& ok) {
  ok = false;
  if (text.size() != 2) return S3::identity();
  int a = text[0] - '1', b = text[1] - '1';
  if (a < 0 || a > 2 || b < 0 || b > 2 || a == b) return S3::identity();
  ok = true;
  return S3::transposition(static_cast<uint8_t>(a), static_cast<uint8_t>(b));
}

}  // namespace hftwo
