#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace holistic {

/// Solve a cyclic tridiagonal system with constant coefficients,
///
///   off*x[j-1] + diag*x[j] + off*x[j+1] = rhs[j]   (indices mod n),
///
/// by the Sherman-Morrison reduction of the wrap-around corner entries to a
/// rank-one update of an ordinary tridiagonal system.  Requires n >= 3 and a
/// strictly diagonally dominant matrix (|diag| > 2|off|), which guarantees the
/// Thomas sweeps are stable without pivoting.
template <typename Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> cyclic_tridiagonal_solve(
    Scalar diag, Scalar off, const Eigen::Vector<Scalar, Eigen::Dynamic>& rhs) {
    using Vec = Eigen::Vector<Scalar, Eigen::Dynamic>;
    const Eigen::Index n = rhs.size();
    if (n < 3) throw std::invalid_argument("cyclic_tridiagonal_solve: need n >= 3");

    // Plain Thomas solve for the non-cyclic part with modified first/last
    // diagonal entries; gamma is chosen to keep the modified matrix dominant.
    const Scalar gamma = -diag;
    Vec b(n);
    b.setConstant(diag);
    b[0] = diag - gamma;
    b[n - 1] = diag - off * off / gamma;

    auto thomas = [&](const Vec& d) {
        Vec c(n), x(n);
        Scalar beta = b[0];
        x[0] = d[0] / beta;
        for (Eigen::Index j = 1; j < n; ++j) {
            c[j] = off / beta;
            beta = b[j] - off * c[j];
            x[j] = (d[j] - off * x[j - 1]) / beta;
        }
        for (Eigen::Index j = n - 2; j >= 0; --j) x[j] -= c[j + 1] * x[j + 1];
        return x;
    };

    Vec u = Vec::Zero(n);
    u[0] = gamma;
    u[n - 1] = off;

    const Vec y = thomas(rhs);
    const Vec z = thomas(u);

    // v = (1, 0, ..., 0, off/gamma); correction factor <v,y> / (1 + <v,z>).
    const Scalar vy = y[0] + (off / gamma) * y[n - 1];
    const Scalar vz = z[0] + (off / gamma) * z[n - 1];
    return y - (vy / (Scalar(1) + vz)) * z;
}

}  // namespace holistic
