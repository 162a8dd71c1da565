#pragma once

#include <vector>

namespace holistic {

/// Closed interval of admissible nondimensional wavenumbers.
struct WavenumberBand {
    double lo;
    double hi;
};

/// Closure of { kappa >= 0 : tan(kappa/2) <= kappa/(2C) } on [0, kappa_max],
/// for coupling factor C in (0, 1].  Band interiors end at roots of
/// tan(kappa/2) = kappa/(2C), located per branch by bisection-safeguarded
/// Newton with brackets offset from the tangent poles.  For C = 1 the first
/// band degenerates to {0} and the next one starts exactly at pi.
std::vector<WavenumberBand> allowed_wavenumber_bands(double C, double kappa_max = 6.0 * 3.14159265358979323846);

/// Total length of the bands intersected with [0, kappa_max].
double band_measure(const std::vector<WavenumberBand>& bands, double kappa_max);

}  // namespace holistic
