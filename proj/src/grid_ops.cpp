#include "holistic/grid_ops.hpp"

#include <cmath>

#include "holistic/cyclic_tridiagonal.hpp"

namespace holistic {

GridField sine_field(int n, double amplitude) {
    const double h = 2.0 * M_PI / n;
    Eigen::VectorXd v(n);
    for (int j = 0; j < n; ++j) v[j] = amplitude * std::sin(j * h);
    return GridField(std::move(v), h);
}

GridField reflect_negate(const GridField& f) {
    const Eigen::Index n = f.size();
    Eigen::VectorXd v(n);
    for (Eigen::Index j = 0; j < n; ++j) v[j] = -f.values[(n - j) % n];
    return GridField(std::move(v), f.spacing);
}

namespace {

void require_min_size(const Eigen::VectorXd& f) {
    if (f.size() < 3) throw std::invalid_argument("grid operator: need at least 3 points");
}

}  // namespace

Eigen::VectorXd delta2(const Eigen::VectorXd& f) {
    require_min_size(f);
    const Eigen::Index n = f.size();
    Eigen::VectorXd g(n);
    for (Eigen::Index j = 0; j < n; ++j)
        g[j] = f[(j + 1) % n] - 2.0 * f[j] + f[(j + n - 1) % n];
    return g;
}

Eigen::VectorXd mu_delta(const Eigen::VectorXd& f) {
    require_min_size(f);
    const Eigen::Index n = f.size();
    Eigen::VectorXd g(n);
    for (Eigen::Index j = 0; j < n; ++j)
        g[j] = 0.5 * (f[(j + 1) % n] - f[(j + n - 1) % n]);
    return g;
}

Eigen::VectorXd nabla(const Eigen::VectorXd& f) {
    require_min_size(f);
    const Eigen::Index n = f.size();
    Eigen::VectorXd g(n);
    for (Eigen::Index j = 0; j < n; ++j) g[j] = f[j] - f[(j + n - 1) % n];
    return g;
}

Eigen::VectorXd shift(const Eigen::VectorXd& f, int k) {
    require_min_size(f);
    const Eigen::Index n = f.size();
    Eigen::VectorXd g(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::Index m = (j + k) % n;
        if (m < 0) m += n;
        g[j] = f[m];
    }
    return g;
}

Eigen::VectorXd s_smooth(const Eigen::VectorXd& f) {
    require_min_size(f);
    return cyclic_tridiagonal_solve<double>(2.0 / 3.0, 1.0 / 6.0, f);
}

Eigen::VectorXd s_inverse(const Eigen::VectorXd& f) {
    require_min_size(f);
    return f + delta2(f) / 6.0;
}

GridField apply(OperatorKind op, const GridField& f) {
    Eigen::VectorXd g;
    switch (op.tag) {
        case OperatorKind::Tag::Shift:    g = shift(f.values, op.shift); break;
        case OperatorKind::Tag::Delta2:   g = delta2(f.values); break;
        case OperatorKind::Tag::MuDelta:  g = mu_delta(f.values); break;
        case OperatorKind::Tag::Nabla:    g = nabla(f.values); break;
        case OperatorKind::Tag::S:        g = s_smooth(f.values); break;
        case OperatorKind::Tag::SInverse: g = s_inverse(f.values); break;
    }
    return GridField(std::move(g), f.spacing);
}

std::complex<double> symbol(OperatorKind op, double kappa) {
    using namespace std::complex_literals;
    const double c = std::cos(kappa);
    const double s = std::sin(kappa);
    switch (op.tag) {
        case OperatorKind::Tag::Shift: {
            const double a = op.shift * kappa;
            return {std::cos(a), std::sin(a)};
        }
        case OperatorKind::Tag::Delta2:   return 2.0 * c - 2.0;
        case OperatorKind::Tag::MuDelta:  return 1i * s;
        case OperatorKind::Tag::Nabla:    return 1.0 - std::complex<double>(c, -s);
        case OperatorKind::Tag::S:        return 6.0 / (4.0 + 2.0 * c);
        case OperatorKind::Tag::SInverse: return (4.0 + 2.0 * c) / 6.0;
    }
    return 0.0;  // unreachable
}

Eigen::MatrixXd operator_matrix(OperatorKind op, Eigen::Index n) {
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        GridField e(Eigen::VectorXd::Unit(n, k), 1.0);
        m.col(k) = apply(op, e).values;
    }
    return m;
}

}  // namespace holistic
