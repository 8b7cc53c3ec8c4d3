#pragma once

#include <string>

#include "kcn/instance.hpp"

namespace kcn {

/// SVG drawing of a planar or 1D instance; when `sol` is given its centers
/// and their radius-r balls are drawn on top. Higher dimensions are projected
/// onto the first two coordinates.
std::string render_svg(const Instance& inst, const Solution* sol = nullptr);

}  // namespace kcn
