#include "holistic/stability.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "holistic/grid_ops.hpp"

namespace holistic {

namespace {

// Interior slots 1..M of the (M+2)-point periodic grid; outer points 0 and
// M+1 are pinned at zero.
GridField embed(const Eigen::VectorXd& V) {
    const int M = static_cast<int>(V.size());
    Eigen::VectorXd u = Eigen::VectorXd::Zero(M + 2);
    u.segment(1, M) = V;
    return GridField(std::move(u), 1.0);
}

std::vector<Eigen::Index> interior_indices(int M) {
    std::vector<Eigen::Index> idx(M);
    for (int j = 0; j < M; ++j) idx[j] = j + 1;
    return idx;
}

}  // namespace

ReducedSystem reduce(const ModelSpec& spec, int M) {
    if (M < 1) throw std::invalid_argument("reduce: M must be >= 1");
    if (spec.kind != ModelKind::Mixture && spec.kind != ModelKind::Holistic1)
        throw std::invalid_argument("reduce: spec.kind must be Mixture or Holistic1");

    // Nondimensional variables V = alpha H U / nu absorb every parameter; the
    // reduced right-hand side equals the model with nu = alpha = H = 1.
    ModelSpec unit = spec;
    unit.nu = 1.0;
    unit.alpha = 1.0;
    unit.H = 1.0;

    ReducedSystem sys;
    sys.M = M;

    std::ostringstream desc;
    desc << (spec.kind == ModelKind::Mixture ? "mixture" : "holistic1");
    if (spec.kind == ModelKind::Mixture) desc << "(theta=" << spec.theta << ")";
    if (spec.kind == ModelKind::Holistic1) desc << "(gamma=" << spec.gamma << ")";
    desc << " on " << M + 2 << "-point periodic grid, interior 1.." << M
         << ", outer points pinned to 0";
    sys.description = desc.str();

    const auto interior = interior_indices(M);

    if (spec.kind == ModelKind::Mixture) {
        sys.rhs = [unit, interior, M](const Eigen::VectorXd& V) {
            const GridField U = embed(V);
            const GridField g = dirichlet_mask(mixture_rhs(U, unit), interior);
            return Eigen::VectorXd(g.values.segment(1, M));
        };
        sys.jacobian = [unit, M](const Eigen::VectorXd& V) {
            const GridField U = embed(V);
            const Eigen::MatrixXd J = model_jacobian(U, unit);
            return Eigen::MatrixXd(J.block(1, 1, M, M));
        };
    } else {
        // The smoother acts on the interior-masked flux, and the evolution of
        // the pinned points is discarded.
        sys.rhs = [unit, interior, M](const Eigen::VectorXd& V) {
            const GridField U = embed(V);
            const GridField b = dirichlet_mask(holistic1_flux(U, unit), interior);
            const Eigen::VectorXd g = s_smooth(b.values);
            return Eigen::VectorXd(g.segment(1, M));
        };
        sys.jacobian = [unit, M](const Eigen::VectorXd& V) {
            const GridField U = embed(V);
            const Eigen::Index n = M + 2;
            const Eigen::MatrixXd MD = operator_matrix(OperatorKind::MuDelta(), n);
            const Eigen::MatrixXd D2 = operator_matrix(OperatorKind::Delta2(), n);
            const Eigen::VectorXd& u = U.values;
            Eigen::MatrixXd B = unit.gamma * D2;
            B -= (1.0 / 3.0) *
                 (Eigen::MatrixXd(mu_delta(u).asDiagonal()) + u.asDiagonal() * MD +
                  2.0 * MD * Eigen::MatrixXd(u.asDiagonal()));
            const Eigen::MatrixXd S = operator_matrix(OperatorKind::S(), n);
            // Mask the flux columns/rows: only interior flux entries feed S,
            // and only interior rows of the result evolve.
            const Eigen::MatrixXd full = S.middleCols(1, M) * B.block(1, 0, M, n);
            return Eigen::MatrixXd(full.block(1, 1, M, M));
        };
    }
    return sys;
}

bool refine_equilibrium(const ReducedSystem& sys, Eigen::VectorXd& point) {
    Eigen::VectorXd x = point;
    for (int it = 0; it < 80; ++it) {
        const Eigen::VectorXd f = sys.rhs(x);
        if (!f.allFinite()) return false;
        if (f.lpNorm<Eigen::Infinity>() < 1e-12) {
            point = x;
            return true;
        }
        const Eigen::MatrixXd J = sys.jacobian(x);
        const Eigen::VectorXd step = J.partialPivLu().solve(-f);
        if (!step.allFinite()) return false;
        // Backtracking damping on ||rhs||.
        double lambda = 1.0;
        const double f0 = f.norm();
        bool accepted = false;
        for (int bt = 0; bt < 30; ++bt) {
            const Eigen::VectorXd trial = x + lambda * step;
            const Eigen::VectorXd ft = sys.rhs(trial);
            if (ft.allFinite() && ft.norm() < (1.0 - 0.25 * lambda) * f0 + 1e-300) {
                x = trial;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!accepted) return false;
    }
    return false;
}

std::vector<Eigen::VectorXd> find_equilibria(const ReducedSystem& sys, double box, int grid) {
    if (!(box > 0.0)) throw std::invalid_argument("find_equilibria: box must be positive");
    if (grid < 3) throw std::invalid_argument("find_equilibria: grid must be >= 3");

    const int M = sys.M;
    std::vector<Eigen::VectorXd> roots;
    const double dedup_tol = 1e-7;

    const long total = static_cast<long>(std::pow(grid, M));
    for (long t = 0; t < total; ++t) {
        long rem = t;
        Eigen::VectorXd start(M);
        for (int d = 0; d < M; ++d) {
            const int i = static_cast<int>(rem % grid);
            rem /= grid;
            start[d] = -box + 2.0 * box * i / (grid - 1);
        }
        Eigen::VectorXd x = start;
        if (!refine_equilibrium(sys, x)) continue;
        if (sys.rhs(x).lpNorm<Eigen::Infinity>() >= 1e-10) continue;
        bool duplicate = false;
        for (const auto& r : roots)
            if ((r - x).lpNorm<Eigen::Infinity>() < dedup_tol) {
                duplicate = true;
                break;
            }
        if (!duplicate) roots.push_back(std::move(x));
    }
    // Deterministic ordering.
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        for (Eigen::Index i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return roots;
}

std::vector<std::complex<double>> eigenvalues_at(const ReducedSystem& sys,
                                                 const Eigen::VectorXd& point) {
    if (sys.rhs(point).lpNorm<Eigen::Infinity>() >= 1e-8)
        throw std::invalid_argument("eigenvalues_at: point is not an equilibrium");
    const Eigen::MatrixXd J = sys.jacobian(point);
    Eigen::EigenSolver<Eigen::MatrixXd> es(J);
    std::vector<std::complex<double>> ev(J.rows());
    for (Eigen::Index i = 0; i < J.rows(); ++i) ev[i] = es.eigenvalues()[i];
    std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return ev;
}

M3Analysis mixture_m3_analysis(double theta) {
    if (theta < 0.0 || theta > 1.0)
        throw std::invalid_argument("mixture_m3_analysis: theta must lie in [0,1]");

    M3Analysis out;
    out.quartic_coeff4 = theta * (1.0 - theta) * (theta * theta - 3.0 * theta + 1.0);
    out.quartic_coeff2 = 16.0 * (2.0 * theta * theta - 4.0 * theta + 1.0);
    out.quartic_coeff0 = -256.0;

    // Real nonzero mu roots of c4 mu^4 + c2 mu^2 + c0 = 0 (biquadratic).
    std::vector<double> ysq;
    const double c4 = out.quartic_coeff4, c2 = out.quartic_coeff2, c0 = out.quartic_coeff0;
    if (std::abs(c4) < 1e-300) {
        if (c2 != 0.0) {
            const double y = -c0 / c2;
            if (y > 0.0) ysq.push_back(y);
        }
    } else {
        const double disc = c2 * c2 - 4.0 * c4 * c0;
        if (disc >= 0.0) {
            const double r = std::sqrt(disc);
            for (const double y : {(-c2 + r) / (2.0 * c4), (-c2 - r) / (2.0 * c4)})
                if (y > 0.0) ysq.push_back(y);
        }
    }
    for (const double y : ysq) {
        const double mu = std::sqrt(y);
        out.mu_roots.push_back(mu);
        out.mu_roots.push_back(-mu);
    }
    std::sort(out.mu_roots.begin(), out.mu_roots.end());

    const ModelSpec spec = ModelSpec::mixture(theta, 1.0, 1.0, 1.0);
    const ReducedSystem sys = reduce(spec, 3);

    for (const double mu : out.mu_roots) {
        M3Analysis::CriticalPoint cp;
        cp.mu = mu;
        const double den1 = 8.0 + 2.0 * mu * (1.0 - theta);
        const double den3 = 8.0 - 2.0 * mu * (1.0 - theta);
        cp.at_infinity = std::abs(den1) < 1e-9 || std::abs(den3) < 1e-9;
        if (!cp.at_infinity) {
            cp.V = Eigen::Vector3d(mu * (4.0 - mu * theta) / den1, mu,
                                   mu * (4.0 + mu * theta) / den3);
            Eigen::VectorXd v = cp.V;
            // The algebraic point should already satisfy rhs = 0; polish once
            // through Newton to clear roundoff before classifying.
            refine_equilibrium(sys, v);
            cp.V = v;
            cp.eigenvalues = eigenvalues_at(sys, v);
            cp.unstable = std::any_of(cp.eigenvalues.begin(), cp.eigenvalues.end(),
                                      [](const auto& l) { return l.real() > 0.0; });
            if (cp.unstable) ++out.unstable_count;
        } else {
            cp.V.setZero();
            cp.unstable = false;
        }
        out.points.push_back(std::move(cp));
    }
    return out;
}

}  // namespace holistic
