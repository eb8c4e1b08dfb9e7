#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hftwo/domain.hpp"
#include "hftwo/generators.hpp"

namespace hftwo {

enum class DomainShape { Rectangle, Annulus, Octagon };

struct DifferentialTerm {
  Generator y;
  DomainVector domain;
  int upower = 0;  // n_w, 0 or 1
  DomainShape shape = DomainShape::Rectangle;
};

// The classified Maslov-index-one enumerator: empty embedded rectangles
// away from the basepoints, and the two n_w = 1 shapes (rectangle-with-a-
// disk-removed annuli through a shared coordinate, embedded octagons),
// found by boundary walks with quarter corners. Every produced domain is
// re-verified (mu=1, embeddedness, corner profile); a violation throws,
// since it falsifies the classification.
class DifferentialEngine {
 public:
  explicit DifferentialEngine(const AdaptedDiagram& d);
  ~DifferentialEngine();
  DifferentialEngine(const DifferentialEngine&) = delete;

  std::vector<DifferentialTerm> enumerate(const Generator& x) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<DifferentialTerm> enumerate_differential_domains(
    const AdaptedDiagram& d, const Generator& x);

struct OracleResult {
  std::vector<DifferentialTerm> terms;  // mu == target, nw <= nwMax
  bool complete = true;                 // false when the node budget fired
  unsigned long long nodes = 0;
};

// Exhaustive bounded search: all boundary-consistent non-negative domains
// from x with entries <= max_coeff and total basepoint multiplicity
// <= nw_max, filtered to Maslov index mu_target. Deterministic order.
OracleResult oracle_search(const AdaptedDiagram& d, const Generator& x,
                           int max_coeff, int mu_target, int nw_max,
                           unsigned long long node_budget = 200'000'000ULL);

// Set comparison helper: canonical (y, domain) keys.
std::vector<std::string> term_keys(const std::vector<DifferentialTerm>& ts);

}  // namespace hftwo
