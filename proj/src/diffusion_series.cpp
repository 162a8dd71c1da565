#include "holistic/diffusion_series.hpp"

#include <cmath>
#include <stdexcept>

namespace holistic {

namespace {

using SPoly = Polynomial<RationalSymbol>;

SPoly base_field() {
    // (1-xi) z^{-1} + xi
    const RationalSymbol zinv = RationalSymbol::z_power(-1);
    return SPoly({zinv, RationalSymbol(1) - zinv});
}

// Double antiderivative with value and slope zero at xi = 0.
SPoly double_integral(const SPoly& p) { return p.integral().integral(); }

RationalSymbol eval_at_one(const SPoly& p) {
    RationalSymbol acc;
    for (const auto& c : p.coeffs()) acc += c;
    return acc;
}

RationalSymbol eval_at_zero(const SPoly& p) { return p.coeff(0); }

// z P'(0) - P'(1), the left-hand side of the derivative coupling condition
// collected on one element (the node value terms cancel by interpolation).
RationalSymbol coupling_lhs(const SPoly& p) {
    const SPoly dp = p.derivative();
    return RationalSymbol::z_power(1) * eval_at_zero(dp) - eval_at_one(dp);
}

}  // namespace

SymbolSeries construct_diffusion_symbol(int max_order) {
    if (max_order < 1 || max_order > 5)
        throw std::invalid_argument("construct_diffusion_symbol: order must be in 1..5");

    const RationalSymbol d = delta2_symbol();
    SymbolSeries series;
    series.orders.push_back({base_field(), RationalSymbol(0)});

    // W = double integral of the base field; the coefficient of g^n in the
    // coupling condition is the same at every order.
    const SPoly W = double_integral(base_field());
    const RationalSymbol DW =
        (RationalSymbol::z_power(1) - RationalSymbol(1)) * eval_at_one(W) +
        eval_at_one(W.derivative());
    if (DW.is_zero())
        throw std::runtime_error("construct_diffusion_symbol: non-solvable linear step");

    for (int n = 1; n <= max_order; ++n) {
        // Known right-hand side sum_{m=1}^{n-1} P_m g^{n-m} of P_n'' = P_0 g^n + RHS.
        SPoly rhs_known;
        for (int m = 1; m <= n - 1; ++m)
            rhs_known += series.orders[n - m].evolution * series.orders[m].field;

        const SPoly A = double_integral(rhs_known);
        // Coupling condition at order n: z P_n'(0) - P_n'(1) = c_n,
        // c_1 = -d from the gamma-expansion of C(gamma) = 1-gamma, else 0.
        const RationalSymbol cn = (n == 1) ? -d : RationalSymbol(0);

        const RationalSymbol gn =
            -(cn + (RationalSymbol::z_power(1) - RationalSymbol(1)) * eval_at_one(A) +
              eval_at_one(A.derivative())) /
            DW;

        const RationalSymbol a = -(eval_at_one(A) + gn * eval_at_one(W));
        SPoly P = A + gn * W + SPoly({RationalSymbol(0), a});

        // Per-step verification: interpolation, coupling, and the element ODE.
        if (!eval_at_zero(P).is_zero() || !eval_at_one(P).is_zero())
            throw std::runtime_error("construct_diffusion_symbol: boundary vanishing failed");
        if (coupling_lhs(P) != cn)
            throw std::runtime_error("construct_diffusion_symbol: coupling residual nonzero");
        SPoly ode = P.derivative().derivative() - rhs_known - gn * base_field();
        if (!ode.is_zero())
            throw std::runtime_error("construct_diffusion_symbol: element ODE residual nonzero");

        series.orders.push_back({std::move(P), gn});
    }
    return series;
}

void verify_residual_nullity(const SymbolSeries& series) {
    const RationalSymbol d = delta2_symbol();
    for (int n = 1; n <= series.max_order(); ++n) {
        SPoly rhs;
        for (int m = 0; m <= n - 1; ++m)
            rhs += series.orders[n - m].evolution * series.orders[m].field;
        if (!(series.orders[n].field.derivative().derivative() - rhs).is_zero())
            throw std::runtime_error("verify_residual_nullity: PDE residual nonzero");
        const RationalSymbol cn = (n == 1) ? -d : RationalSymbol(0);
        if (coupling_lhs(series.orders[n].field) != cn)
            throw std::runtime_error("verify_residual_nullity: coupling residual nonzero");
        if (!eval_at_zero(series.orders[n].field).is_zero() ||
            !eval_at_one(series.orders[n].field).is_zero())
            throw std::runtime_error("verify_residual_nullity: boundary value nonzero");
    }
}

double decay_rate(const SymbolSeries& series, double kappa, double gamma) {
    return decay_rate(series, kappa, gamma, series.max_order());
}

double decay_rate(const SymbolSeries& series, double kappa, double gamma, int up_to_order) {
    if (up_to_order < 1 || up_to_order > series.max_order())
        throw std::invalid_argument("decay_rate: order outside the constructed series");
    const std::complex<double> z(std::cos(kappa), std::sin(kappa));
    std::complex<double> acc(0.0, 0.0);
    double g = 1.0;
    for (int n = 1; n <= up_to_order; ++n) {
        g *= gamma;
        acc += g * series.orders[n].evolution.eval(z);
    }
    return acc.real();
}

long double decay_rate_ld(const SymbolSeries& series, long double kappa, long double gamma) {
    const std::complex<long double> z(std::cos(kappa), std::sin(kappa));
    std::complex<long double> acc(0.0L, 0.0L);
    long double g = 1.0L;
    for (int n = 1; n <= series.max_order(); ++n) {
        g *= gamma;
        acc += g * series.orders[n].evolution.eval(z);
    }
    return acc.real();
}

}  // namespace holistic
