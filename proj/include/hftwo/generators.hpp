#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hftwo/diagram.hpp"
#include "hftwo/intmat.hpp"

namespace hftwo {

// One intersection point per alpha curve, one per beta (a perfect matching
// of the alpha/beta incidence multigraph).
struct Generator {
  std::vector<int> point_on_alpha;  // crossing id per alpha index

  bool operator==(const Generator&) const = default;
  bool operator<(const Generator& o) const {
    return point_on_alpha < o.point_on_alpha;
  }
};

// Point indexed by beta, derived.
std::vector<int> points_by_beta(const AdaptedDiagram& d, const Generator& x);
bool is_valid_generator(const AdaptedDiagram& d, const Generator& x);
std::string generator_key(const Generator& x);

// Permanent of the alpha x beta intersection-count matrix by Ryser
// inclusion-exclusion; equals the generator count.
unsigned __int128 permanent_count(const AdaptedDiagram& d);
unsigned __int128 ryser_permanent(const std::vector<std::vector<int>>& m);
std::string u128_str(unsigned __int128 v);

// Streaming backtracking enumeration in lexicographic point order. The
// callback may return false to stop; returns the number of generators
// visited (all of them when no limit fires).
unsigned __int128 enumerate_generators(
    const AdaptedDiagram& d,
    const std::function<bool(const Generator&)>& fn);
// Count-only backtracking walk (the oracle for the permanent).
unsigned __int128 count_generators_backtracking(const AdaptedDiagram& d);

// Deterministic seeded sample.
Generator sample_generator(const AdaptedDiagram& d, std::mt19937_64& rng);

// pi_2-connectedness sectors via the cokernel class of the
// boundary-consistency system.
class SectorTable {
 public:
  explicit SectorTable(const AdaptedDiagram& d);

  std::vector<long long> rhs(const AdaptedDiagram& d, const Generator& x,
                             const Generator& y) const;
  // Canonical sector label of x.
  std::string sector_of(const AdaptedDiagram& d, const Generator& x) const;
  // Some integer domain connecting x to y, when one exists.
  std::optional<std::vector<long long>> connecting_domain(
      const AdaptedDiagram& d, const Generator& x, const Generator& y) const;

 private:
  ColumnReduction cr_;
};

}  // namespace hftwo
