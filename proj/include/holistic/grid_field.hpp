#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace holistic {

/// Periodic grid samples U_j, j = 0..N-1, with uniform spacing H.
/// Index arithmetic is modulo N; a GridField is an immutable value after
/// construction and all operations on it are pure functions.
struct GridField {
    Eigen::VectorXd values;
    double spacing = 1.0;

    GridField() = default;
    GridField(Eigen::VectorXd v, double h) : values(std::move(v)), spacing(h) {
        if (values.size() < 3)
            throw std::invalid_argument("GridField: need at least 3 grid points");
        if (!(spacing > 0.0))
            throw std::invalid_argument("GridField: spacing must be positive");
    }

    Eigen::Index size() const { return values.size(); }

    /// Periodic index wrap (handles negative j).
    Eigen::Index wrap(Eigen::Index j) const {
        const Eigen::Index n = values.size();
        j %= n;
        return j < 0 ? j + n : j;
    }

    double operator()(Eigen::Index j) const { return values[wrap(j)]; }
};

/// Sine initial condition U_j = A sin(j H) on an n-point grid with H = 2*pi/n.
GridField sine_field(int n, double amplitude);

/// Reflection-negation (R U)_j = -U_{-j mod N}.
GridField reflect_negate(const GridField& f);

}  // namespace holistic
