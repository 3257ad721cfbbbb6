#pragma once

#include <vector>

#include "freqlab/grid.hpp"

namespace freqlab {

/// Second-order central-difference Laplacian. Output loses one boundary layer
/// (margin + 1); masked nodes hold NaN. Requires >= 5 points per axis of
/// remaining interior.
ScalarField laplacian(const ScalarField& f);

/// Componentwise central differences; same masking as laplacian.
std::vector<ScalarField> gradient(const ScalarField& f);

}  // namespace freqlab
