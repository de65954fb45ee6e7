#pragma once

#include <string>

#include "frontier/preprocess.h"
#include "frontier/reconstruct.h"

namespace frontier {

// Debug rendering of the preprocessed structure: truncated regions tinted by
// role, the guaranteed boundary, dependency arrows, and (optionally) the
// reconstructed front with retrieval marks. Output element order is stable so
// renders diff cleanly.
std::string render_svg(const AuxStructure& aux, const ImplicitFront* front = nullptr);

}  // namespace frontier
