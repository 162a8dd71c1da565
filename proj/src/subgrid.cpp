#include "holistic/subgrid.hpp"

#include <cmath>
#include <stdexcept>

#include "holistic/grid_ops.hpp"

namespace holistic {

double SubgridField::eval(double x) const {
    const Eigen::Index n = elements();
    const double length = n * spacing;
    double t = std::fmod(x - x0, length);
    if (t < 0.0) t += length;
    Eigen::Index e = static_cast<Eigen::Index>(std::floor(t / spacing));
    if (e >= n) e = n - 1;  // guard t == length after fmod rounding
    const double xi = t / spacing - static_cast<double>(e);
    return eval_element(e, xi);
}

SubgridField piecewise_linear(const GridField& U) {
    const Eigen::Index n = U.size();
    SubgridField f;
    f.spacing = U.spacing;
    f.x0 = 0.0;
    f.a = Eigen::VectorXd::Zero(n);
    f.b = Eigen::VectorXd::Zero(n);
    f.c.resize(n);
    f.d.resize(n);
    for (Eigen::Index e = 0; e < n; ++e) {
        const double ul = U.values[e];
        const double ur = U.values[(e + 1) % n];
        f.c[e] = ur - ul;
        f.d[e] = ul;
    }
    return f;
}

double apply_I0(const GridField& V, double xi, Eigen::Index j) {
    return xi * V(j) + (1.0 - xi) * V(j - 1);
}

double apply_I1(const GridField& V, double xi, Eigen::Index j) {
    const double vr = V(j);
    const double vl = V(j - 1);
    const double om = 1.0 - xi;
    return xi * xi * xi * vr + om * om * om * vl - xi * (vr - vl) - vl;
}

SubgridField holistic_field(const GridField& U, const ModelSpec& spec) {
    if (spec.kind != ModelKind::Holistic1)
        throw std::invalid_argument("holistic_field: spec.kind must be Holistic1");
    const Eigen::Index n = U.size();
    const GridField g = holistic1_rhs(U, spec);

    SubgridField f = piecewise_linear(U);
    const double wg = spec.H * spec.H / (6.0 * spec.nu);
    for (Eigen::Index e = 0; e < n; ++e) {
        const Eigen::Index r = (e + 1) % n;
        const double gl = g.values[e], gr = g.values[r];
        const double ul = U.values[e], ur = U.values[r];
        const double wu = spec.alpha * spec.H * (ur - ul) / (6.0 * spec.nu);
        f.a[e] += wg * (gr - gl) + wu * (ur - ul);
        f.b[e] += 3.0 * (wg * gl + wu * ul);
        f.c[e] -= wg * (2.0 * gl + gr) + wu * (2.0 * ul + ur);
    }
    return f;
}

SubgridField natural_periodic_spline(const GridField& U) {
    const Eigen::Index n = U.size();
    const double H = U.spacing;

    // Nodal second derivatives M from the standard C^2 conditions,
    //   (H/6) M_{j-1} + (2H/3) M_j + (H/6) M_{j+1} = (U_{j+1} - 2U_j + U_{j-1})/H,
    // solved densely so this construction shares no code with the grid ops.
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        A(j, (j + n - 1) % n) += H / 6.0;
        A(j, j) += 2.0 * H / 3.0;
        A(j, (j + 1) % n) += H / 6.0;
        rhs[j] = (U((Eigen::Index)j + 1) - 2.0 * U.values[j] + U(j - 1)) / H;
    }
    const Eigen::VectorXd M = A.partialPivLu().solve(rhs);

    SubgridField f;
    f.spacing = H;
    f.x0 = 0.0;
    f.a.resize(n);
    f.b.resize(n);
    f.c.resize(n);
    f.d.resize(n);
    const double h2 = H * H;
    for (Eigen::Index e = 0; e < n; ++e) {
        const Eigen::Index r = (e + 1) % n;
        f.a[e] = h2 / 6.0 * (M[r] - M[e]);
        f.b[e] = h2 / 2.0 * M[e];
        f.c[e] = (U.values[r] - U.values[e]) - h2 / 6.0 * (2.0 * M[e] + M[r]);
        f.d[e] = U.values[e];
    }
    return f;
}

Eigen::VectorXd jump_check(const SubgridField& field, const ModelSpec& spec) {
    if (spec.alpha != 0.0)
        throw std::invalid_argument("jump_check: defined for alpha = 0 only");
    const Eigen::Index n = field.elements();
    const double H = field.spacing;
    const double C = 1.0 - spec.gamma;
    Eigen::VectorXd r(n);
    // Node j is the right end of element slot j-1 and the left end of slot j.
    for (Eigen::Index node = 0; node < n; ++node) {
        const Eigen::Index el = (node + n - 1) % n;  // element left of the node
        const Eigen::Index er = node;                // element right of the node
        const double dxr = field.eval_element_dxi(er, 0.0) / H;
        const double dxl = field.eval_element_dxi(el, 1.0) / H;
        const double jump_ux = spec.nu * (dxr - dxl);

        const double u_next_minus = field.eval_element(er, 1.0);    // u|_{X_{j+1}^-}
        const double u_plus = field.eval_element(er, 0.0);          // u|_{X_j^+}
        const double u_prev_plus = field.eval_element(el, 0.0);     // u|_{X_{j-1}^+}
        const double u_minus = field.eval_element(el, 1.0);         // u|_{X_j^-}
        r[node] = jump_ux -
                  (C / H) * spec.nu * (u_next_minus - u_plus + u_prev_plus - u_minus);
    }
    return r;
}

}  // namespace holistic
