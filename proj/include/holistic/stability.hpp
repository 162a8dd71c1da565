#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "holistic/model.hpp"

namespace holistic {

/// Nondimensionalised reduced system for M adjacent excited grid points with
/// pinned zero neighbours: rhs maps V to H^2/nu * dV/dt.  The origin is an
/// equilibrium for every model handled here.
struct ReducedSystem {
    int M = 0;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> rhs;
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian;  // analytic
    std::string description;
};

/// Build the reduced system for Mixture or Holistic1.  The M interior points
/// sit inside an (M+2)-point periodic grid with both outer points pinned to
/// zero; for the smoothed model the nonlocal solve acts on the interior-masked
/// flux, which is what reproduces the closed-form two- and three-point
/// reductions.
ReducedSystem reduce(const ModelSpec& spec, int M);

/// Damped-Newton search from a grid of starts in [-box, box]^M; returns the
/// deduplicated roots with ||rhs||_inf < 1e-10 (non-converged starts are
/// dropped).
std::vector<Eigen::VectorXd> find_equilibria(const ReducedSystem& sys, double box, int grid);

/// Newton refinement from a single starting point; returns true on
/// convergence to ||rhs||_inf < 1e-12.
bool refine_equilibrium(const ReducedSystem& sys, Eigen::VectorXd& point);

/// Jacobian eigenvalues at an equilibrium (rejects points with
/// ||rhs||_inf >= 1e-8), sorted by real part.
std::vector<std::complex<double>> eigenvalues_at(const ReducedSystem& sys,
                                                 const Eigen::VectorXd& point);

/// Closed-form analysis of the three-point mixture reduction.
struct M3Analysis {
    double quartic_coeff4 = 0.0;  // theta (1-theta) (theta^2 - 3 theta + 1)
    double quartic_coeff2 = 0.0;  // 16 (2 theta^2 - 4 theta + 1)
    double quartic_coeff0 = 0.0;  // -256
    std::vector<double> mu_roots;              // real nonzero roots
    struct CriticalPoint {
        double mu;
        Eigen::Vector3d V;
        bool at_infinity;   // a coordinate denominator vanished
        bool unstable;      // some eigenvalue has positive real part
        std::vector<std::complex<double>> eigenvalues;
    };
    std::vector<CriticalPoint> points;
    int unstable_count = 0;  // finite unstable critical points
};

/// Roots of mu [c4 mu^4 + c2 mu^2 + c0] = 0 and the corresponding critical
/// points V1 = mu(4-mu theta)/(8+2mu(1-theta)), V2 = mu,
/// V3 = mu(4+mu theta)/(8-2mu(1-theta)), classified through the Jacobian of
/// the reduced system.
M3Analysis mixture_m3_analysis(double theta);

}  // namespace holistic
