#pragma once

#include <vector>

#include "holistic/grid_field.hpp"

namespace holistic {

enum class ModelKind { Mixture, Holistic1, Holistic2, DiffusionHolistic };

/// Parameters of a discrete closure dU/dt = g(U) for Burgers' equation.
///
/// theta is meaningful for Mixture only, order for DiffusionHolistic only.
/// gamma is the inter-element coupling strength; gamma = 1 is full coupling.
struct ModelSpec {
    ModelKind kind = ModelKind::Mixture;
    double theta = 0.0;
    double gamma = 1.0;
    double nu = 1.0;
    double alpha = 1.0;
    int order = 1;
    double H = 1.0;

    static ModelSpec mixture(double theta, double nu, double alpha, double H);
    static ModelSpec holistic1(double nu, double alpha, double H, double gamma = 1.0);
    static ModelSpec holistic2(double nu, double alpha, double H, double gamma = 1.0);
    static ModelSpec diffusion(int order, double nu, double H, double gamma = 1.0);

    void validate() const;
};

/// Classical blend of advective and conservative forms with weight theta:
///   g_j = -(1-theta) alpha U_j (mu delta U)_j / H
///         - theta alpha (mu delta U^2)_j / (2H) + nu (delta^2 U)_j / H^2.
GridField mixture_rhs(const GridField& U, const ModelSpec& spec);

/// The field inside the first-order smoothed closure, before S is applied:
///   b_j = nu gamma (delta^2 U)_j / H^2
///         - alpha [U_j (mu delta U)_j + (mu delta U^2)_j] / (3H).
/// With S replaced by the identity this equals the mixture right-hand side at
/// theta = 2/3 (and gamma = 1).
GridField holistic1_flux(const GridField& U, const ModelSpec& spec);

/// First-order closure g = S[holistic1_flux].
GridField holistic1_rhs(const GridField& U, const ModelSpec& spec);

/// First-order closure plus the gamma*alpha cross-coupling correction, a
/// ten-term bracket of compositions of S powers, mu*delta, and pointwise
/// products, scaled by gamma*alpha/H.
GridField holistic2_rhs(const GridField& U, const ModelSpec& spec);

/// Smoothed closures of the pure diffusion equation (alpha must be 0):
///   order 1:  nu gamma/H^2            S delta^2 U
///   order 2:  + nu gamma^2/(60 H^2)   (7 - 2S) S^2 delta^4 U
///   order 3:  + nu gamma^3/(6300 H^2) (94 - 73S + 14S^2) S^3 delta^6 U.
GridField diffusion_holistic_rhs(const GridField& U, const ModelSpec& spec);

/// Dispatch on spec.kind.
GridField model_rhs(const GridField& U, const ModelSpec& spec);

/// Zero every entry of rhs whose index is not in `interior`.
GridField dirichlet_mask(const GridField& rhs, const std::vector<Eigen::Index>& interior);

/// Analytic Jacobian d(model_rhs)/dU as a dense matrix (Mixture/Holistic1).
Eigen::MatrixXd model_jacobian(const GridField& U, const ModelSpec& spec);

}  // namespace holistic
