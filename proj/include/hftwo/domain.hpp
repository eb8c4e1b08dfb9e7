#pragma once

#include <vector>

#include "hftwo/diagram.hpp"
#include "hftwo/generators.hpp"

namespace hftwo {

// Integer multiplicity per elementary domain.
using DomainVector = std::vector<long long>;

long long nw_of(const AdaptedDiagram& d, const DomainVector& dv);
bool is_nonnegative(const DomainVector& dv);
bool is_embedded(const DomainVector& dv);  // all entries 0 or 1

// Four quadrant multiplicities at a crossing, NE,NW,SW,SE.
std::array<long long, 4> quadrants_at(const AdaptedDiagram& d,
                                      const DomainVector& dv, int crossing);

// A * dv == rhs(x, y), the per-crossing corner relation.
bool boundary_consistent(const AdaptedDiagram& d, const DomainVector& dv,
                         const Generator& x, const Generator& y);

// Quarter-integer measures: p4 = 4p, mu4 = 4*mu, and so on. For
// non-negative domains mu is the Lipshitz value e + p; for general domains
// the same formula is reported with formula_extended set.
struct DomainStats {
  long long e = 0;        // Euler measure (integer on these diagrams)
  long long p4 = 0;       // point measure * 4
  long long mu4 = 0;      // Maslov index * 4, = 4e + p4
  long long delta4 = 0;   // diagonal intersection * 4, = mu4 - 8e
  long long d_count = 0;  // x-coordinates with non-zero local multiplicity
  long long chiS4 = 0;    // 4*d - delta4
  long long branch4 = 0;  // mu4 - 4e - 2d
  long long nw = 0;
  bool nonneg = false;
  bool formula_extended = false;  // mu reported via e+p on a signed domain
};

DomainStats domain_stats(const AdaptedDiagram& d, const DomainVector& dv,
                         const Generator& x, const Generator& y);

// Euler characteristic of the closed region of an embedded domain,
// computed from its own cells (independent of the measures above).
long long embedded_region_chi(const AdaptedDiagram& d, const DomainVector& dv);

}  // namespace hftwo
