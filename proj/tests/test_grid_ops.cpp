#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "holistic/grid_ops.hpp"
#include "test_helpers.hpp"

using namespace holistic;
using holistic::test::random_field;

TEST_CASE("constant fields are fixed points of S") {
    for (int n : {3, 4, 7, 12}) {
        GridField f(Eigen::VectorXd::Constant(n, 2.75), 1.0);
        const GridField g = apply(OperatorKind::S(), f);
        CHECK((g.values - f.values).lpNorm<Eigen::Infinity>() < 1e-14);
    }
}

TEST_CASE("alternating mode is scaled by 3 under S") {
    const int n = 8;
    Eigen::VectorXd f(n);
    for (int j = 0; j < n; ++j) f[j] = std::cos(M_PI * j);
    const GridField g = apply(OperatorKind::S(), GridField(f, 1.0));
    CHECK((g.values - 3.0 * f).lpNorm<Eigen::Infinity>() < 1e-13);
}

TEST_CASE("S and its forward inverse compose to the identity") {
    const GridField f = random_field(8, 42);
    const GridField g = apply(OperatorKind::SInverse(), apply(OperatorKind::S(), f));
    CHECK((g.values - f.values).lpNorm<Eigen::Infinity>() < 1e-13);
    const GridField h = apply(OperatorKind::S(), apply(OperatorKind::SInverse(), f));
    CHECK((h.values - f.values).lpNorm<Eigen::Infinity>() < 1e-13);
}

TEST_CASE("operators reject fields below three points") {
    Eigen::VectorXd two(2);
    two << 1.0, 2.0;
    CHECK_THROWS_AS(GridField(two, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(delta2(two), std::invalid_argument);
}

TEST_CASE("Shift(0) is the identity") {
    const GridField f = random_field(6, 7);
    CHECK((apply(OperatorKind::Shift(0), f).values - f.values).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("symbol values at special wavenumbers") {
    CHECK(symbol(OperatorKind::Delta2(), 0.0) == std::complex<double>(0.0, 0.0));
    CHECK(std::abs(symbol(OperatorKind::S(), M_PI) - 3.0) < 1e-15);
}

TEST_CASE("applying an operator to a Fourier mode multiplies by its symbol") {
    const int n = 8, m = 1;
    const double kappa = 2.0 * M_PI * m / n;
    Eigen::VectorXd re(n), im(n);
    for (int j = 0; j < n; ++j) {
        re[j] = std::cos(kappa * j);
        im[j] = std::sin(kappa * j);
    }
    const GridField fre(re, 1.0), fim(im, 1.0);

    auto check_op = [&](OperatorKind op) {
        const std::complex<double> s = symbol(op, kappa);
        const Eigen::VectorXd gre = apply(op, fre).values;
        const Eigen::VectorXd gim = apply(op, fim).values;
        for (int j = 0; j < n; ++j) {
            const std::complex<double> mode(re[j], im[j]);
            const std::complex<double> expected = s * mode;
            CHECK(std::abs(gre[j] - expected.real()) < 1e-13);
            CHECK(std::abs(gim[j] - expected.imag()) < 1e-13);
        }
    };
    check_op(OperatorKind::Delta2());
    check_op(OperatorKind::MuDelta());
    check_op(OperatorKind::Nabla());
    check_op(OperatorKind::S());
    check_op(OperatorKind::SInverse());
    check_op(OperatorKind::Shift(2));
    check_op(OperatorKind::Shift(-3));
}

TEST_CASE("S preserves grid sums") {
    for (int n : {3, 5, 8, 16}) {
        const GridField f = random_field(n, 100 + n);
        const GridField g = apply(OperatorKind::S(), f);
        CHECK(std::abs(g.values.sum() - f.values.sum()) < 1e-13 * n);
    }
}

TEST_CASE("smoothed second difference is symmetric and negative semidefinite") {
    for (int n = 4; n <= 16; ++n) {
        const Eigen::MatrixXd M = operator_matrix(OperatorKind::S(), n) *
                                  operator_matrix(OperatorKind::Delta2(), n);
        CHECK((M - M.transpose()).cwiseAbs().maxCoeff() < 1e-13);

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (M + M.transpose()));
        const Eigen::VectorXd ev = es.eigenvalues();
        CHECK(ev.maxCoeff() < 1e-12);          // no positive eigenvalue
        int zeros = 0;
        for (int i = 0; i < n; ++i)
            if (std::abs(ev[i]) < 1e-10) ++zeros;
        CHECK(zeros == 1);                      // exactly the constant mode
    }
}

TEST_CASE("S commutes with the second difference") {
    const GridField f = random_field(9, 3);
    const Eigen::VectorXd a = s_smooth(delta2(f.values));
    const Eigen::VectorXd b = delta2(s_smooth(f.values));
    CHECK((a - b).lpNorm<Eigen::Infinity>() < 1e-13);
}

TEST_CASE("reflection-negation is an involution") {
    const GridField f = random_field(10, 11);
    const GridField g = reflect_negate(reflect_negate(f));
    CHECK((g.values - f.values).lpNorm<Eigen::Infinity>() == 0.0);
}
