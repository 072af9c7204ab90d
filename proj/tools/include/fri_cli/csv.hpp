#pragma once

#include <ostream>

#include "fri/interpolation.hpp"

namespace fri::cli {

/// Two sections separated by a blank line: `x,mu` rows sampled on the same
/// grid the defuzzifier uses, then the `alpha,lower,upper` cut table.
/// Abnormal conclusions emit their raw polyline instead of resampling.
void write_conclusion_csv(std::ostream& os, const OutputConclusion& conclusion, int num_points);

} // namespace fri::cli
