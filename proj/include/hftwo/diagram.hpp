#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hftwo/cocycle.hpp"
#include "hftwo/grid.hpp"
#include "hftwo/monodromy.hpp"
#include "hftwo/surface.hpp"

namespace hftwo {

// Which boundary circle of a grid annulus counts as its "right endcircle":
// Top keeps the curve at the larger cyclic index (the line above a
// horizontal strip, right of a vertical strip); Bottom is the other reading.
enum class EndcircleConvention { Top, Bottom };

struct CurveLift {
  int family = 0;  // 0 = alpha (horizontal line), 1 = beta (vertical)
  int line = 0;    // downstairs position: py for alpha, px for beta
  bool is_new = false;
  bool double_cover = false;
  bool selected = false;
  int sel_index = -1;          // alpha/beta number when selected
  std::vector<int> edges;      // edge copies in traversal order, all forward
};

struct MergedDomain {
  std::vector<int> faces;  // upstairs faces
  int octagon_face = -1;
  int corners = 0;
  bool disk = false;
  int basepoint = -1;  // w-index for octagonal domains
};

// A selected alpha-beta intersection point.
struct Crossing {
  int vertex = 0;
  int alpha = 0, beta = 0;
  int px = 0, py = 0;  // downstairs vertex position
  uint8_t sheet = 0;
  std::array<int, 4> quad{};  // NE,NW,SW,SE merged domains
};

struct DiagramError {
  std::string check;  // short name of the violated validation
  std::string message;
};

struct AdaptedDiagram {
  ExtendedGrid eg;
  Monodromy mono;
  MarkerBranching mb;
  EndcircleConvention endcircle = EndcircleConvention::Top;
  TransitionCocycle coc;
  CoverSurface surf;

  std::vector<CurveLift> lifts;
  std::vector<int> alpha, beta;    // sel index -> lift id
  std::vector<int> lift_of_edge;   // edge copy -> lift id

  std::vector<MergedDomain> domains;
  std::vector<int> domain_of_face;      // upstairs face -> domain
  std::vector<int> basepoints;          // domain ids in w-order
  std::vector<Crossing> crossings;
  std::vector<int> crossing_at_vertex;  // vertex -> crossing id or -1
  // [alpha][beta] -> crossing ids (1 or 2 entries)
  std::vector<std::vector<std::vector<int>>> pair_points;

  int n() const { return eg.n(); }
  int curves_per_side() const { return 3 * eg.n(); }
  int num_domains() const { return static_cast<int>(domains.size()); }
  int num_crossings() const { return static_cast<int>(crossings.size()); }
  // Intersection count of a selected pair (1 or 2).
  int pair_count(int a, int b) const {
    return static_cast<int>(pair_points[a][b].size());
  }
};

// Full pipeline: cocycle, surface, lifts, selection, merge; every structural
// postcondition is checked and the first violation is reported.
std::optional<AdaptedDiagram> build_diagram(const ExtendedGrid& eg,
                                            const Monodromy& mono,
                                            EndcircleConvention conv,
                                            DiagramError& err);

// As build_diagram but from an externally supplied cocycle (used by the
// gauge-independence tests).
std::optional<AdaptedDiagram> build_diagram_with_cocycle(
    const ExtendedGrid& eg, const Monodromy& mono, EndcircleConvention conv,
    const TransitionCocycle& coc, DiagramError& err);

struct PropertyCheck {
  std::string name;
  bool pass = false;
  std::string details;
};

// Proposition-style structural report: elementary-domain shapes, pants
// decompositions, intersection counts and signs, projection degrees,
// admissibility.
std::vector<PropertyCheck> validate_properties(const AdaptedDiagram& d);
bool all_pass(const std::vector<PropertyCheck>& checks);

// Basis of integer 2-chains with boundary on the selected curves and zero
// multiplicity at every basepoint domain; rank equals b_1(Y).
std::vector<std::vector<long long>> periodic_lattice(const AdaptedDiagram& d);

struct AdmissibilityResult {
  bool admissible = false;
  // A nontrivial non-negative periodic domain when inadmissible.
  std::vector<long long> counterexample;
};
AdmissibilityResult check_admissibility(const AdaptedDiagram& d,
                                        const std::vector<std::vector<long long>>& lattice);

// Constraint matrix of the boundary-consistency system: one row per
// crossing, one column per domain, entries from the four quadrants.
std::vector<std::vector<long long>> constraint_matrix(const AdaptedDiagram& d);

// Canonical serialization modulo sheet relabeling; equal strings iff the
// diagrams are isomorphic over the same extended grid data.
std::string canonical_form(const AdaptedDiagram& d);

}  // namespace hftwo
