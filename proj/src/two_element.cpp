#include "holistic/two_element.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace holistic {

namespace {

using QPoly = Polynomial<Rational>;

QPoly double_integral(const QPoly& p) { return p.integral().integral(); }

Rational eval_rat(const QPoly& p, const Rational& x) { return p.eval(x); }

}  // namespace

std::vector<Rational> TwoElementSeries::gamma_series() const {
    std::vector<Rational> c(gamma_order + 1, Rational(0));
    for (int p = 1; p <= gamma_order; ++p) {
        auto it = orders.find({p, 0});
        if (it != orders.end()) c[p] = it->second.evolution;
    }
    return c;
}

TwoElementSeries two_element_series(int gamma_orders, int alpha_orders) {
    if (gamma_orders < 1 || gamma_orders > 7)
        throw std::invalid_argument("two_element_series: gamma order must be in 1..7");
    if (alpha_orders < 0 || alpha_orders > 2)
        throw std::invalid_argument("two_element_series: alpha order must be in 0..2");

    TwoElementSeries series;
    series.gamma_order = gamma_orders;
    series.alpha_order = alpha_orders;

    // Seed: the piecewise-linear equilibrium (1-|x|) U.
    TwoElementOrder seed;
    seed.right = QPoly({Rational(1), Rational(-1)});  // 1 - x
    seed.left = QPoly({Rational(1), Rational(1)});    // 1 + x
    seed.evolution = Rational(0);
    series.orders[{0, 0}] = seed;

    // W = double integral of the seed shape on each side; the evolution
    // coefficient enters every order through these fixed profiles.
    const QPoly W_right = double_integral(seed.right);  // x^2/2 - x^3/6
    const QPoly W_left = double_integral(seed.left);    // x^2/2 + x^3/6

    for (int n = 1; n <= gamma_orders + alpha_orders; ++n) {
        for (int q = 0; q <= std::min(n, alpha_orders); ++q) {
            const int p = n - q;
            if (p > gamma_orders || q > p) continue;  // q > p orders vanish identically

            // Accumulated residual terms at order gamma^p alpha^q.  The
            // nonlinearity is slaved to the coupling homotopy (each alpha
            // carries a matching gamma), which is the grading under which the
            // two-interval expansion is labelled.
            // From -du/dU . g: (q1+1) f_{p1 q1} c_{p2 q2} over p1+p2=p, q1+q2=q.
            QPoly rhs_r, rhs_l;
            for (const auto& [key1, f1] : series.orders) {
                for (const auto& [key2, f2] : series.orders) {
                    if (key2 == std::pair<int, int>{0, 0}) continue;  // no g at order 0
                    if (key1.first + key2.first != p || key1.second + key2.second != q)
                        continue;
                    const Rational w = Rational(key1.second + 1) * f2.evolution;
                    rhs_r += w * f1.right;
                    rhs_l += w * f1.left;
                }
            }
            // From +gamma alpha u u_x: products one (gamma, alpha) grade down.
            if (q >= 1 && p >= 1) {
                for (const auto& [key1, f1] : series.orders) {
                    for (const auto& [key2, f2] : series.orders) {
                        if (key1.first + key2.first != p - 1 ||
                            key1.second + key2.second != q - 1)
                            continue;
                        rhs_r += f1.right * f2.right.derivative();
                        rhs_l += f1.left * f2.left.derivative();
                    }
                }
            }

            const QPoly A_r = double_integral(rhs_r);
            const QPoly A_l = double_integral(rhs_l);
            const Rational A_r1 = eval_rat(A_r, Rational(1));
            const Rational A_lm1 = eval_rat(A_l, Rational(-1));

            // Derivative-jump right side at this order: +2 at gamma^1 alpha^0.
            const Rational jump =
                (p == 1 && q == 0) ? Rational(2) : Rational(0);

            // Unknowns: evolution coefficient c and the linear slopes a_r, a_l,
            // pinned by u(+-1) = 0, the jump condition, and u(0) = 0 per side.
            const Rational c = Rational(-3, 2) * (jump + A_r1 + A_lm1);
            const Rational a_r = -A_r1 - c / Rational(3);
            const Rational a_l = A_lm1 + c / Rational(3);

            TwoElementOrder ord;
            ord.evolution = c;
            ord.right = A_r + c * W_right + QPoly({Rational(0), a_r});
            ord.left = A_l + c * W_left + QPoly({Rational(0), a_l});

            // Verify the order against the governing equations.
            if (eval_rat(ord.right, Rational(1)) != 0 || eval_rat(ord.left, Rational(-1)) != 0)
                throw std::runtime_error("two_element_series: Dirichlet end condition failed");
            if (ord.right.coeff(0) != 0 || ord.left.coeff(0) != 0)
                throw std::runtime_error("two_element_series: amplitude condition failed");
            const Rational djump =
                ord.right.derivative().coeff(0) - ord.left.derivative().coeff(0);
            if (djump != jump)
                throw std::runtime_error("two_element_series: derivative jump failed");
            const QPoly shape_r = QPoly({Rational(1), Rational(-1)});
            const QPoly shape_l = QPoly({Rational(1), Rational(1)});
            if (!(ord.right.derivative().derivative() - rhs_r - c * shape_r).is_zero() ||
                !(ord.left.derivative().derivative() - rhs_l - c * shape_l).is_zero())
                throw std::runtime_error("two_element_series: element ODE residual nonzero");

            series.orders[{p, q}] = std::move(ord);
        }
    }
    return series;
}

namespace {

// Safeguarded Newton for f(k) = tan k - k on the branch (n pi, n pi + pi/2).
double tan_branch_root(int n) {
    const double lo0 = n * M_PI + 1e-9;
    const double hi0 = n * M_PI + M_PI / 2.0 - 1e-9;
    double lo = lo0, hi = hi0;
    auto f = [](double k) { return std::tan(k) - k; };
    // f(lo) < 0 < f(hi); bisect with Newton acceleration.
    double k = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fk = f(k);
        if (fk > 0.0)
            hi = k;
        else
            lo = k;
        const double t = std::tan(k);
        const double df = t * t;  // d/dk of tan k - k = sec^2 k - 1
        double next = (df != 0.0) ? k - fk / df : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - k) < 1e-15 * std::abs(k)) return next;
        k = next;
    }
    return k;
}

}  // namespace

std::vector<TwoElementEigenvalue> two_element_eigenvalues(int count) {
    if (count < 1) throw std::invalid_argument("two_element_eigenvalues: count must be >= 1");
    std::vector<TwoElementEigenvalue> out;
    out.reserve(2 * count);
    for (int n = 1; n <= count; ++n) {
        const double k = tan_branch_root(n);
        out.push_back({k, -k * k, true});
        const double kp = n * M_PI;
        out.push_back({kp, -kp * kp, false});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::abs(a.lambda) < std::abs(b.lambda);
    });
    return out;
}

}  // namespace holistic
