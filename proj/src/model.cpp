#include "holistic/model.hpp"

#include <stdexcept>

#include "holistic/grid_ops.hpp"

namespace holistic {

ModelSpec ModelSpec::mixture(double theta, double nu, double alpha, double H) {
    ModelSpec s{ModelKind::Mixture, theta, 1.0, nu, alpha, 1, H};
    s.validate();
    return s;
}

ModelSpec ModelSpec::holistic1(double nu, double alpha, double H, double gamma) {
    ModelSpec s{ModelKind::Holistic1, 0.0, gamma, nu, alpha, 1, H};
    s.validate();
    return s;
}

ModelSpec ModelSpec::holistic2(double nu, double alpha, double H, double gamma) {
    ModelSpec s{ModelKind::Holistic2, 0.0, gamma, nu, alpha, 1, H};
    s.validate();
    return s;
}

ModelSpec ModelSpec::diffusion(int order, double nu, double H, double gamma) {
    ModelSpec s{ModelKind::DiffusionHolistic, 0.0, gamma, nu, 0.0, order, H};
    s.validate();
    return s;
}

void ModelSpec::validate() const {
    if (!(nu > 0.0)) throw std::invalid_argument("ModelSpec: nu must be positive");
    if (!(H > 0.0)) throw std::invalid_argument("ModelSpec: H must be positive");
    if (kind == ModelKind::Mixture && (theta < 0.0 || theta > 1.0))
        throw std::invalid_argument("ModelSpec: theta must lie in [0,1]");
    if (kind == ModelKind::DiffusionHolistic) {
        if (order < 1 || order > 3)
            throw std::invalid_argument("ModelSpec: order must be 1, 2 or 3");
        if (alpha != 0.0)
            throw std::invalid_argument("ModelSpec: diffusion closure requires alpha = 0");
    }
}

GridField mixture_rhs(const GridField& U, const ModelSpec& spec) {
    if (spec.kind != ModelKind::Mixture)
        throw std::invalid_argument("mixture_rhs: spec.kind must be Mixture");
    const Eigen::VectorXd& u = U.values;
    const double h = spec.H;
    const Eigen::VectorXd usq = u.array().square();
    Eigen::VectorXd g =
        (-(1.0 - spec.theta) * spec.alpha / h) * u.cwiseProduct(mu_delta(u)) -
        (spec.theta * spec.alpha / (2.0 * h)) * mu_delta(usq) +
        (spec.nu / (h * h)) * delta2(u);
    return GridField(std::move(g), h);
}

GridField holistic1_flux(const GridField& U, const ModelSpec& spec) {
    const Eigen::VectorXd& u = U.values;
    const double h = spec.H;
    const Eigen::VectorXd usq = u.array().square();
    Eigen::VectorXd b = (spec.nu * spec.gamma / (h * h)) * delta2(u) -
                        (spec.alpha / (3.0 * h)) * (u.cwiseProduct(mu_delta(u)) + mu_delta(usq));
    return GridField(std::move(b), h);
}

GridField holistic1_rhs(const GridField& U, const ModelSpec& spec) {
    if (spec.kind != ModelKind::Holistic1 && spec.kind != ModelKind::Holistic2)
        throw std::invalid_argument("holistic1_rhs: spec.kind must be Holistic1/Holistic2");
    GridField b = holistic1_flux(U, spec);
    return GridField(s_smooth(b.values), spec.H);
}

namespace {

// The gamma*alpha correction bracket: ten terms in S powers, mu*delta and
// pointwise products, divided by H.  S^k(x) means S applied k times.
Eigen::VectorXd holistic2_correction(const Eigen::VectorXd& u, double h) {
    const Eigen::VectorXd usq = u.array().square();
    const Eigen::VectorXd md_u = mu_delta(u);
    const Eigen::VectorXd s_md_u = s_smooth(md_u);
    const Eigen::VectorXd s_u = s_smooth(u);
    const Eigen::VectorXd md_usq = mu_delta(usq);
    const Eigen::VectorXd s_md_usq = s_smooth(md_usq);
    const Eigen::VectorXd s2_md_usq = s_smooth(s_md_usq);
    const Eigen::VectorXd s3_md_usq = s_smooth(s2_md_usq);

    const Eigen::VectorXd u_smd = u.cwiseProduct(s_md_u);   // U * (S mu delta U)
    const Eigen::VectorXd u_md = u.cwiseProduct(md_u);      // U * (mu delta U)
    const Eigen::VectorXd su_md = s_u.cwiseProduct(md_u);   // (S U) * (mu delta U)

    const Eigen::VectorXd s_u_smd = s_smooth(u_smd);
    const Eigen::VectorXd s_u_md = s_smooth(u_md);
    const Eigen::VectorXd s2_u_smd = s_smooth(s_u_smd);
    const Eigen::VectorXd s2_u_md = s_smooth(s_u_md);
    const Eigen::VectorXd s3_u_md = s_smooth(s2_u_md);
    const Eigen::VectorXd s_su_md = s_smooth(su_md);

    Eigen::VectorXd g = -(1.0 / 10.0) * s_u_smd
                        - (1.0 / 6.0) * s_u_md
                        + (1.0 / 10.0) * s_su_md
                        - (1.0 / 5.0) * s2_u_smd
                        + (13.0 / 30.0) * s2_u_md
                        - (1.0 / 15.0) * s3_u_md
                        - (1.0 / 15.0) * s3_md_usq
                        + (7.0 / 30.0) * s2_md_usq
                        + (2.0 / 5.0) * u_smd
                        - (11.0 / 30.0) * s_md_usq;
    return g / h;
}

}  // namespace

GridField holistic2_rhs(const GridField& U, const ModelSpec& spec) {
    if (spec.kind != ModelKind::Holistic2)
        throw std::invalid_argument("holistic2_rhs: spec.kind must be Holistic2");
    GridField g1 = holistic1_rhs(U, spec);
    g1.values += spec.gamma * spec.alpha * holistic2_correction(U.values, spec.H);
    return g1;
}

GridField diffusion_holistic_rhs(const GridField& U, const ModelSpec& spec) {
    if (spec.kind != ModelKind::DiffusionHolistic)
        throw std::invalid_argument("diffusion_holistic_rhs: spec.kind must be DiffusionHolistic");
    if (spec.alpha != 0.0)
        throw std::invalid_argument("diffusion_holistic_rhs: alpha must be 0");
    const double h2 = spec.H * spec.H;
    const double g = spec.gamma;

    const Eigen::VectorXd d2 = delta2(U.values);
    Eigen::VectorXd out = (spec.nu * g / h2) * s_smooth(d2);
    if (spec.order >= 2) {
        const Eigen::VectorXd d4 = delta2(d2);
        const Eigen::VectorXd s2d4 = s_smooth(s_smooth(d4));
        out += (spec.nu * g * g / (60.0 * h2)) * (7.0 * s2d4 - 2.0 * s_smooth(s2d4));
    }
    if (spec.order >= 3) {
        const Eigen::VectorXd d6 = delta2(delta2(d2));
        const Eigen::VectorXd s3d6 = s_smooth(s_smooth(s_smooth(d6)));
        const Eigen::VectorXd s4d6 = s_smooth(s3d6);
        out += (spec.nu * g * g * g / (6300.0 * h2)) *
               (94.0 * s3d6 - 73.0 * s4d6 + 14.0 * s_smooth(s4d6));
    }
    return GridField(std::move(out), spec.H);
}

GridField model_rhs(const GridField& U, const ModelSpec& spec) {
    switch (spec.kind) {
        case ModelKind::Mixture:           return mixture_rhs(U, spec);
        case ModelKind::Holistic1:         return holistic1_rhs(U, spec);
        case ModelKind::Holistic2:         return holistic2_rhs(U, spec);
        case ModelKind::DiffusionHolistic: return diffusion_holistic_rhs(U, spec);
    }
    throw std::logic_error("model_rhs: unknown kind");
}

GridField dirichlet_mask(const GridField& rhs, const std::vector<Eigen::Index>& interior) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(rhs.size());
    for (Eigen::Index j : interior) {
        if (j < 0 || j >= rhs.size())
            throw std::invalid_argument("dirichlet_mask: interior index out of range");
        g[j] = rhs.values[j];
    }
    return GridField(std::move(g), rhs.spacing);
}

Eigen::MatrixXd model_jacobian(const GridField& U, const ModelSpec& spec) {
    const Eigen::Index n = U.size();
    const double h = spec.H;
    const Eigen::MatrixXd D2 = operator_matrix(OperatorKind::Delta2(), n);
    const Eigen::MatrixXd MD = operator_matrix(OperatorKind::MuDelta(), n);
    const Eigen::VectorXd& u = U.values;

    switch (spec.kind) {
        case ModelKind::Mixture: {
            // d/dU of -(1-th) a U o (MD U) - th a MD(U^2)/2 + nu D2 U, over H powers
            Eigen::MatrixXd J = (spec.nu / (h * h)) * D2;
            J -= ((1.0 - spec.theta) * spec.alpha / h) *
                 (Eigen::MatrixXd(mu_delta(u).asDiagonal()) + u.asDiagonal() * MD);
            J -= (spec.theta * spec.alpha / h) * MD * Eigen::MatrixXd(u.asDiagonal());
            return J;
        }
        case ModelKind::Holistic1: {
            Eigen::MatrixXd B = (spec.nu * spec.gamma / (h * h)) * D2;
            B -= (spec.alpha / (3.0 * h)) *
                 (Eigen::MatrixXd(mu_delta(u).asDiagonal()) + u.asDiagonal() * MD +
                  2.0 * MD * Eigen::MatrixXd(u.asDiagonal()));
            return operator_matrix(OperatorKind::S(), n) * B;
        }
        default:
            throw std::invalid_argument("model_jacobian: implemented for Mixture/Holistic1");
    }
}

}  // namespace holistic
