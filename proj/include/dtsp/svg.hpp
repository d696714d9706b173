#pragma once

#include <string>

#include "dtsp/instance.hpp"
#include "dtsp/tour.hpp"

namespace dtsp {

/// Renders a tour as a standalone SVG document: one circle marker per point,
/// one heading tick per point, and one path (or line, for straight-only
/// edges) per tour edge. Output bytes depend only on the inputs.
std::string render_svg(const Instance& instance, const TourConfig& config,
                       const TourEvaluation& eval);

}  // namespace dtsp
