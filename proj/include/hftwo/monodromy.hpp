#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hftwo/grid.hpp"
#include "hftwo/s3.hpp"

namespace hftwo {

// One transposition per column, labeling that column's vertical over-strand.
struct Monodromy {
  std::vector<S3> sigma;

  bool operator==(const Monodromy&) const = default;
};

// Text syntax: "12 12 13 13" (digit pairs naming transpositions).
std::optional<Monodromy> parse_sigma(const std::string& text, int n,
                                     std::string& err);
std::string sigma_string(const Monodromy& m);

// Transposition per marker; both markers of column j carry sigma[j].
struct MarkerBranching {
  std::vector<S3> tau;  // indexed like ExtendedGrid::markers
};

MarkerBranching marker_transpositions(const ExtendedGrid& eg,
                                      const Monodromy& m);

struct WirtingerFailure {
  int row = -1;
  S3 computed, expected;
  std::string message;
};

// Walks each row segment O->X, conjugating by sigma[j] at every crossing
// with column j; the result must match the transposition at the X end.
std::optional<WirtingerFailure> validate_wirtinger(const GridSpec& g,
                                                   const Monodromy& m);

struct TransitivityFailure {
  std::vector<std::vector<int>> orbits;  // 1-based sheet labels
  std::string message;
};

std::optional<TransitivityFailure> validate_transitive(const Monodromy& m);

// All sigma assignments passing both validators, lexicographic in the
// (12)<(13)<(23) order per column. Deterministic.
std::vector<Monodromy> enumerate_monodromies(const GridSpec& g);

}  // namespace hftwo
