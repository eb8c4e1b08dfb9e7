#pragma once

#include <optional>
#include <string>

#include "hftwo/diagram.hpp"

namespace hftwo {

// Full cell-complex export. The file carries the generating data (grid,
// sigma, sides, endcircle convention, cocycle) plus derived tables for
// external consumers; import rebuilds from the generating data and
// cross-checks the derived counts.
std::string diagram_to_json(const AdaptedDiagram& d);
std::optional<AdaptedDiagram> diagram_from_json(const std::string& text,
                                                DiagramError& err);

}  // namespace hftwo
