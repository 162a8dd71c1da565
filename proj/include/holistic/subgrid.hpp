#pragma once

#include "holistic/grid_field.hpp"
#include "holistic/model.hpp"

namespace holistic {

/// Piecewise-cubic field over the periodic grid.  Storage slot e covers
/// [x0 + e H, x0 + (e+1) H] (left node e, right node e+1 mod N) and holds
///   u_e(xi) = a xi^3 + b xi^2 + c xi + d,   xi in [0, 1].
/// Evaluation at any x in [x0, x0 + N H) maps to exactly one element.
struct SubgridField {
    Eigen::VectorXd a, b, c, d;
    double spacing = 1.0;
    double x0 = 0.0;  // left end of the first element

    Eigen::Index elements() const { return a.size(); }

    /// Value of element `j` at local coordinate xi.
    double eval_element(Eigen::Index j, double xi) const {
        return ((a[j] * xi + b[j]) * xi + c[j]) * xi + d[j];
    }

    /// d/dxi of element `j` at xi (one xi-unit equals H in physical length).
    double eval_element_dxi(Eigen::Index j, double xi) const {
        return (3.0 * a[j] * xi + 2.0 * b[j]) * xi + c[j];
    }

    /// Value at physical coordinate x (periodic wrap).
    double eval(double x) const;
};

/// The continuous piecewise-linear interpolant of the grid values.
SubgridField piecewise_linear(const GridField& U);

/// Two-point interpolation weights on element j:
///   I0(xi) V = xi V_j + (1-xi) V_{j-1}
double apply_I0(const GridField& V, double xi, Eigen::Index j);

///   I1(xi) V = xi^3 V_j + (1-xi)^3 V_{j-1} - xi (V_j - V_{j-1}) - V_{j-1};
/// vanishes at xi = 0 and xi = 1, and d^2/dxi^2 I1 = 6 I0.
double apply_I1(const GridField& V, double xi, Eigen::Index j);

/// First-order reconstruction u0 + u1 of the subgrid field:
///   nu u1_j(xi) = (H^2/6) I1(xi) g1 + (alpha H/6) (I1(xi) U) (nabla U)_j,
/// with g1 the first-order closure.  At gamma = 1, alpha = 0 this is the
/// natural periodic cubic spline through the grid values.
SubgridField holistic_field(const GridField& U, const ModelSpec& spec);

/// Independent C^2 periodic cubic spline through (X_j, U_j), built from its
/// own dense linear solve for the nodal second derivatives.
SubgridField natural_periodic_spline(const GridField& U);

/// Residual of the inter-element derivative coupling with C(gamma) = 1-gamma,
///   r_j = [nu u_x]_j - C(gamma)/H (nu u|_{X_{j+1}^-} - nu u|_{X_j^+}
///                                  + nu u|_{X_{j-1}^+} - nu u|_{X_j^-}),
/// evaluated from the cubic coefficients.  Linear check only: alpha must be 0.
Eigen::VectorXd jump_check(const SubgridField& field, const ModelSpec& spec);

}  // namespace holistic
