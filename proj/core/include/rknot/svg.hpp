#pragma once

#include <ostream>
#include <string>

#include "rknot/diagram.hpp"

namespace rknot {

// xy-projection of the curve with a gap in the under strand at every
// crossing. Over/under comes from certified evaluation of the height
// polynomial at the exact crossing parameters.
void render_svg(const Parametrization& p, std::ostream& out);
std::string render_svg(const Parametrization& p);

} // namespace rknot
