#pragma once

#include <map>
#include <utility>
#include <vector>

#include "holistic/polynomial.hpp"
#include "holistic/rational.hpp"

namespace holistic {

/// One (gamma^p alpha^q) order of the two-interval slow manifold on [-1,1]:
/// field polynomials in x on each half (multiplied by U^{q+1}) and the
/// U^{q+1} coefficient of the evolution.
struct TwoElementOrder {
    Polynomial<Rational> left;   // x in [-1, 0]
    Polynomial<Rational> right;  // x in [0, 1]
    Rational evolution;          // coefficient of U^{q+1} in dU/dt
};

/// Bivariate (gamma, alpha)-graded construction of the single-grid-value
/// model: viscosity 1, Dirichlet ends u(+-1) = 0, field continuous at x = 0
/// with derivative jump [u_x] + 2(1-gamma) u = 0, amplitude fixed by
/// u(0) = U.  The nonlinearity is slaved to the coupling homotopy, so each
/// alpha power carries a matching gamma power and orders satisfy q <= p.
struct TwoElementSeries {
    int gamma_order = 0;
    int alpha_order = 0;
    std::map<std::pair<int, int>, TwoElementOrder> orders;

    const TwoElementOrder& at(int p, int q) const { return orders.at({p, q}); }

    /// Evolution coefficients of U (the alpha^0 column): index p holds the
    /// gamma^p coefficient, starting at p = 1.
    std::vector<Rational> gamma_series() const;
};

/// Construct all orders gamma^p alpha^q with p <= gamma_orders <= 7 and
/// q <= alpha_orders <= 2.  Every order is verified against the governing
/// equations before being accepted.
TwoElementSeries two_element_series(int gamma_orders, int alpha_orders);

/// Eigenvalue of the linearised two-interval problem and its wavenumber.
struct TwoElementEigenvalue {
    double k;
    double lambda;          // -k^2
    bool from_tan_branch;   // true: k solves k = tan k; false: k = n pi
};

/// The first `count` roots of k = tan k on successive branches (safeguarded
/// Newton within the pole-offset brackets) merged with the k = n pi family,
/// sorted by |lambda|.
std::vector<TwoElementEigenvalue> two_element_eigenvalues(int count);

}  // namespace holistic
