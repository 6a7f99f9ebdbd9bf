#pragma once

#include <string>

#include "dap/construct.hpp"

namespace dap {

/// Schematic SVG rendering of a construction trace: the base line, every
/// step line clipped to the view box, and labeled points.  Only rational
/// traces have planar coordinates, so any other backend raises Unsupported.
/// All positioning is computed in exact rational arithmetic; coordinates
/// are emitted as fixed-precision decimal strings.
std::string render_trace_svg(const Trace& trace);

} // namespace dap
