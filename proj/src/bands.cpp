#include "holistic/bands.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace holistic {

namespace {

// h(kappa) = tan(kappa/2) - kappa/(2C); a band interior is where h <= 0.
double band_edge_root(double C, double lo, double hi) {
    auto h = [&](double k) { return std::tan(0.5 * k) - k / (2.0 * C); };
    // Requires h(lo) < 0 < h(hi); safeguarded Newton.
    double k = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double hk = h(k);
        if (hk > 0.0)
            hi = k;
        else
            lo = k;
        const double t = std::tan(0.5 * k);
        const double dh = 0.5 * (1.0 + t * t) - 1.0 / (2.0 * C);
        double next = (dh != 0.0) ? k - hk / dh : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - k) < 1e-14 * std::max(1.0, std::abs(k))) return next;
        k = next;
    }
    return k;
}

}  // namespace

std::vector<WavenumberBand> allowed_wavenumber_bands(double C, double kappa_max) {
    if (!(C > 0.0 && C <= 1.0))
        throw std::invalid_argument("allowed_wavenumber_bands: C must lie in (0, 1]");
    if (!(kappa_max > 0.0))
        throw std::invalid_argument("allowed_wavenumber_bands: kappa_max must be positive");

    const double pole_off = 1e-9;
    std::vector<WavenumberBand> bands;

    // First band starts at 0.  For C = 1 the inequality fails throughout
    // (0, pi) and the band is the single point {0}; for C < 1 it extends to
    // the first root of tan(kappa/2) = kappa/(2C) below the pole at pi.
    if (C < 1.0) {
        // h < 0 just right of 0 (slope 1/2 - 1/(2C) < 0), h -> +inf at pi^-.
        bands.push_back({0.0, band_edge_root(C, pole_off, M_PI - pole_off)});
    } else {
        bands.push_back({0.0, 0.0});
    }

    // Band n starts at the pole (2n-1) pi, where tan(kappa/2) jumps to -inf,
    // and ends at the root on that branch.
    for (int n = 1;; ++n) {
        const double start = (2 * n - 1) * M_PI;
        if (start > kappa_max) break;
        const double end =
            band_edge_root(C, start + pole_off, (2 * n + 1) * M_PI - pole_off);
        bands.push_back({start, std::min(end, kappa_max)});
        if (end >= kappa_max) break;
    }
    return bands;
}

double band_measure(const std::vector<WavenumberBand>& bands, double kappa_max) {
    double total = 0.0;
    for (const auto& b : bands) {
        const double lo = std::min(b.lo, kappa_max);
        const double hi = std::min(b.hi, kappa_max);
        total += std::max(0.0, hi - lo);
    }
    return total;
}

}  // namespace holistic
