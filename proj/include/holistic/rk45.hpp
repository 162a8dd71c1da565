#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>

namespace holistic {

enum class StepOutcome { Continue, Stop };

struct Rk45Options {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    double initial_step = 0.0;  // 0: choose automatically
    double max_step = 0.0;      // 0: no cap
};

enum class Rk45Status { ReachedEnd, StoppedByCallback, StepSizeUnderflow };

/// Adaptive embedded Runge-Kutta 5(4) (Dormand-Prince coefficients, FSAL)
/// with PI step-size control.  `on_accept(t, y)` runs after every accepted
/// step and may stop the integration.
template <typename Rhs>
Rk45Status integrate_rk45(
    Rhs&& rhs, double t0, double t_end, Eigen::VectorXd y, const Rk45Options& opt,
    const std::function<StepOutcome(double, const Eigen::VectorXd&)>& on_accept) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    const Eigen::Index n = y.size();
    double t = t0;
    Eigen::VectorXd k1 = rhs(t, y);

    auto error_norm = [&](const Eigen::VectorXd& err, const Eigen::VectorXd& y0,
                          const Eigen::VectorXd& y1) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double scale =
                opt.abs_tol + opt.rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
            const double q = err[i] / scale;
            acc += q * q;
        }
        return std::sqrt(acc / static_cast<double>(n));
    };

    // Automatic initial step (scaled from the first derivative magnitude).
    double h = opt.initial_step;
    if (h <= 0.0) {
        const double d0 = y.norm();
        const double d1 = k1.norm();
        h = (d1 > 1e-12) ? 0.01 * std::max(d0, 1.0) / d1 : 1e-4;
        h = std::min(h, t_end - t0);
    }
    if (opt.max_step > 0.0) h = std::min(h, opt.max_step);

    const double h_min = 1e-14 * std::max(1.0, std::abs(t_end - t0));
    double err_prev = 1.0;
    Eigen::VectorXd k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ynew(n), errv(n);

    while (t < t_end) {
        h = std::min(h, t_end - t);
        if (h < h_min) return Rk45Status::StepSizeUnderflow;

        k2 = rhs(t + c2 * h, y + h * (a21 * k1));
        k3 = rhs(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
        k4 = rhs(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        k5 = rhs(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        k6 = rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        k7 = rhs(t + h, ynew);
        errv = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double err = error_norm(errv, y, ynew);
        if (std::isfinite(err) && err <= 1.0) {
            t += h;
            y.swap(ynew);
            k1.swap(k7);  // FSAL
            if (on_accept(t, y) == StepOutcome::Stop) return Rk45Status::StoppedByCallback;
            // PI controller (order 5).
            const double fac =
                0.9 * std::pow(std::max(err, 1e-10), -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
            err_prev = std::max(err, 1e-10);
            h *= std::clamp(fac, 0.2, 5.0);
        } else {
            const double fac = std::isfinite(err) ? std::max(0.1, 0.9 * std::pow(err, -0.2)) : 0.1;
            h *= std::min(fac, 0.5);
        }
        if (opt.max_step > 0.0) h = std::min(h, opt.max_step);
    }
    return Rk45Status::ReachedEnd;
}

}  // namespace holistic
