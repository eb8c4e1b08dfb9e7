#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hftwo/differential.hpp"

namespace hftwo {

// Chain complex over F2[U]/U^2: generator names plus boundary terms
// (target, u-power) with mod-2 coefficient 1.
struct ChainComplexU2 {
  std::vector<std::string> gens;
  std::vector<std::vector<std::pair<int, int>>> boundary;
  std::string sector;  // label, empty for synthetic complexes

  int size() const { return static_cast<int>(gens.size()); }
};

// JSON surface: {"format":"hftwo-complex","generators":[...],
// "boundary":[{"from":i,"to":j,"upower":0|1},...]}
std::optional<ChainComplexU2> complex_from_json(const std::string& text,
                                                std::string& err);
std::string complex_to_json(const ChainComplexU2& c);

struct DSquaredWitness {
  int from = -1, to = -1, upower = 0;
};
// Checks d(d(x)) = 0 over F2[U]/U^2 for every generator.
std::optional<DSquaredWitness> verify_d_squared(const ChainComplexU2& c);

struct HomologyReport {
  long long rank = 0;           // F2 rank of the homology
  long long free_summands = 0;  // F2[U]/U^2 summands (rank of U on homology)
  long long f2_summands = 0;    // rank - 2*free_summands
  // Lemma-style reduction by the 2^{k-1} torus factor.
  bool reduced = false;
  bool divisible = false;
  long long reduced_rank = 0, reduced_free = 0, reduced_f2 = 0;
};

HomologyReport homology(const ChainComplexU2& c);
// Divides all counts by 2^{k-1}; flags (never rounds) non-divisibility.
HomologyReport lemma23_reduce(const HomologyReport& r, int k);

// Builds the complex of one sector of a diagram by streaming generators
// under a budget; nullopt with skipped=true when the sector/stream exceeds
// the budget.
struct SectorBuild {
  std::optional<ChainComplexU2> complex;
  bool skipped_budget = false;
  unsigned long long streamed = 0;
};
SectorBuild build_sector_complex(const AdaptedDiagram& d,
                                 const Generator& seed,
                                 unsigned long long budget);

}  // namespace hftwo
