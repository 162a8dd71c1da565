#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "holistic/subgrid.hpp"
#include "test_helpers.hpp"

using namespace holistic;
using holistic::test::random_field;

namespace {

GridField fig_example() {
    Eigen::VectorXd u(3);
    u << 0.0, 1.0, -1.0;
    return GridField(u, 2.0 * M_PI / 3.0);
}

double max_sample_difference(const SubgridField& a, const SubgridField& b, int samples) {
    const double length = a.elements() * a.spacing;
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double x = length * i / samples;
        worst = std::max(worst, std::abs(a.eval(x) - b.eval(x)));
    }
    return worst;
}

}  // namespace

TEST_CASE("piecewise linear interpolant hits nodes and midpoints") {
    const GridField U = fig_example();
    const SubgridField f = piecewise_linear(U);
    const double H = U.spacing;
    for (int j = 0; j < 3; ++j) CHECK(f.eval(j * H) == doctest::Approx(U.values[j]).epsilon(1e-14));
    CHECK(f.eval(0.5 * H) == doctest::Approx(0.5));    // midpoint of first element
    CHECK(f.eval(1.5 * H) == doctest::Approx(0.0));    // between 1 and -1
}

TEST_CASE("piecewise linear of a constant is constant") {
    const GridField U(Eigen::VectorXd::Constant(5, 3.25), 1.0);
    const SubgridField f = piecewise_linear(U);
    for (double x : {0.0, 0.37, 1.9, 4.999}) CHECK(f.eval(x) == doctest::Approx(3.25));
}

TEST_CASE("interpolation weights at element ends") {
    const GridField V = random_field(6, 4);
    for (Eigen::Index j = 0; j < 6; ++j) {
        CHECK(apply_I0(V, 0.0, j) == doctest::Approx(V(j - 1)));
        CHECK(apply_I0(V, 1.0, j) == doctest::Approx(V(j)));
        CHECK(apply_I1(V, 0.0, j) == 0.0);
        CHECK(apply_I1(V, 1.0, j) == doctest::Approx(0.0));
    }
}

TEST_CASE("cubic weight second derivative is six times the linear weight") {
    // Fit the cubic in xi through four samples, differentiate twice, compare.
    const GridField V = random_field(5, 21);
    for (Eigen::Index j = 0; j < 5; ++j) {
        Eigen::Matrix4d A;
        Eigen::Vector4d y;
        const double xs[4] = {0.0, 0.3, 0.7, 1.0};
        for (int r = 0; r < 4; ++r) {
            const double t = xs[r];
            A.row(r) << 1.0, t, t * t, t * t * t;
            y[r] = apply_I1(V, t, j);
        }
        const Eigen::Vector4d c = A.fullPivLu().solve(y);
        for (double xi : {0.1, 0.5, 0.9}) {
            const double second = 2.0 * c[2] + 6.0 * c[3] * xi;
            CHECK(std::abs(second - 6.0 * apply_I0(V, xi, j)) < 1e-12);
        }
    }
}

TEST_CASE("reconstruction interpolates the grid values exactly") {
    const GridField U = random_field(8, 13, 0.93);
    const ModelSpec spec = ModelSpec::holistic1(1.4, 1.2, 0.93, 0.8);
    const SubgridField f = holistic_field(U, spec);
    for (int j = 0; j < 8; ++j)
        CHECK(std::abs(f.eval(j * 0.93) - U.values[j]) < 1e-13);
}

TEST_CASE("zero coupling and zero advection leave the linear interpolant") {
    const GridField U = random_field(6, 8);
    const ModelSpec spec = ModelSpec::holistic1(1.0, 0.0, 1.0, 0.0);
    const SubgridField f = holistic_field(U, spec);
    const SubgridField lin = piecewise_linear(U);
    CHECK(max_sample_difference(f, lin, 100) < 1e-14);
}

TEST_CASE("element boundary values agree around the ring") {
    const GridField U = random_field(7, 19);
    const SubgridField f = holistic_field(U, ModelSpec::holistic1(1.0, 1.5, 1.0, 1.0));
    for (Eigen::Index e = 0; e < 7; ++e) {
        const Eigen::Index r = (e + 1) % 7;
        CHECK(std::abs(f.eval_element(e, 1.0) - f.eval_element(r, 0.0)) < 1e-13);
    }
}

TEST_CASE("full coupling with no advection reconstructs the periodic spline") {
    for (int n : {4, 8, 16}) {
        const double H = 2.0 * M_PI / n;
        const GridField U = random_field(n, 500 + n, H);
        const SubgridField holistic = holistic_field(U, ModelSpec::holistic1(1.0, 0.0, H, 1.0));
        const SubgridField spline = natural_periodic_spline(U);
        CHECK(max_sample_difference(holistic, spline, 100) < 1e-12);
    }
}

TEST_CASE("figure example equals the spline reconstruction") {
    const GridField U = fig_example();
    const SubgridField holistic =
        holistic_field(U, ModelSpec::holistic1(1.0, 0.0, U.spacing, 1.0));
    const SubgridField spline = natural_periodic_spline(U);
    CHECK(max_sample_difference(holistic, spline, 200) < 1e-12);
}

TEST_CASE("periodic spline interpolates and is twice continuously differentiable") {
    const GridField U = random_field(9, 40, 1.1);
    const SubgridField s = natural_periodic_spline(U);
    const double H = 1.1;
    for (int j = 0; j < 9; ++j) CHECK(std::abs(s.eval(j * H) - U.values[j]) < 1e-12);
    for (Eigen::Index e = 0; e < 9; ++e) {
        const Eigen::Index r = (e + 1) % 9;
        // first and second xi-derivatives match across nodes
        const double d1l = 3.0 * s.a[e] + 2.0 * s.b[e] + s.c[e];
        const double d1r = s.c[r];
        const double d2l = 6.0 * s.a[e] + 2.0 * s.b[e];
        const double d2r = 2.0 * s.b[r];
        CHECK(std::abs(d1l - d1r) < 1e-10);
        CHECK(std::abs(d2l - d2r) < 1e-10);
    }
}

TEST_CASE("spline of constant data is constant") {
    const GridField U(Eigen::VectorXd::Constant(6, -0.4), 0.8);
    const SubgridField s = natural_periodic_spline(U);
    for (double x : {0.1, 1.3, 3.7}) CHECK(s.eval(x) == doctest::Approx(-0.4));
}

TEST_CASE("derivative coupling residual vanishes for the linear field at zero coupling") {
    const GridField U = random_field(8, 3);
    ModelSpec spec = ModelSpec::holistic1(1.0, 0.0, 1.0, 0.0);
    const Eigen::VectorXd r = jump_check(piecewise_linear(U), spec);
    CHECK(r.lpNorm<Eigen::Infinity>() < 1e-13);
}

TEST_CASE("derivative coupling residual vanishes for the reconstructed field") {
    // The first-order field satisfies the coupling conditions exactly in
    // gamma for the pure diffusion problem; residuals sit at roundoff for
    // every coupling strength, trivially within the O(gamma^2) bound.
    const GridField U = random_field(8, 3);
    for (double gamma : {1.0, 0.7, 0.3, 1e-2, 1e-3}) {
        ModelSpec spec = ModelSpec::holistic1(1.0, 0.0, 1.0, gamma);
        const SubgridField f = holistic_field(U, spec);
        const Eigen::VectorXd r = jump_check(f, spec);
        CHECK(r.lpNorm<Eigen::Infinity>() < 1e-12);
        if (gamma <= 1e-2) CHECK(r.lpNorm<Eigen::Infinity>() / (gamma * gamma) < 1e-6);
    }
}

TEST_CASE("jump check rejects advective fields") {
    const GridField U = random_field(6, 2);
    ModelSpec spec = ModelSpec::holistic1(1.0, 1.0, 1.0, 1.0);
    CHECK_THROWS_AS(jump_check(piecewise_linear(U), spec), std::invalid_argument);
}
