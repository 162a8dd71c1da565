#pragma once

#include <vector>

#include "holistic/polynomial.hpp"
#include "holistic/rational_symbol.hpp"

namespace holistic {

/// One coupling order of the periodic-grid construction: the element field
/// polynomial in xi (degree <= 2n+1, coefficients exact rational functions of
/// z = e^{i kappa}) and the evolution symbol g^n.
struct SymbolOrder {
    Polynomial<RationalSymbol> field;
    RationalSymbol evolution;
};

/// Graded series for the smoothed diffusion closure.  orders[0] is the
/// piecewise-linear base field (1-xi) z^{-1} + xi with no evolution term;
/// orders[n] for n >= 1 carries gamma^n.
struct SymbolSeries {
    std::vector<SymbolOrder> orders;

    int max_order() const { return static_cast<int>(orders.size()) - 1; }
};

/// Iteratively construct the field and evolution symbols of the diffusion
/// equation (alpha = 0, nu = H = 1 internally; results scale by nu/H^2) on the
/// periodic grid, driving the residual of the heat equation plus the coupling
/// conditions (C(gamma) = 1-gamma) to zero identically through order p.
/// Every step is verified symbolically; a non-solvable step throws.
SymbolSeries construct_diffusion_symbol(int max_order);

/// Nondimensional decay rate lambda_bar = sum_n gamma^n g^n(e^{i kappa}).
double decay_rate(const SymbolSeries& series, double kappa, double gamma);

/// Partial sum truncated at `up_to_order` (the order-p closure's rate).
double decay_rate(const SymbolSeries& series, double kappa, double gamma, int up_to_order);

/// Same in extended precision, for convergence-order studies where the
/// cancellation lambda_bar + kappa^2 sits below double roundoff.
long double decay_rate_ld(const SymbolSeries& series, long double kappa, long double gamma);

/// Re-derive the order-n residual of the heat equation and coupling conditions
/// from scratch and require it to vanish identically; throws on failure.
void verify_residual_nullity(const SymbolSeries& series);

}  // namespace holistic
