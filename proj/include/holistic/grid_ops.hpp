#pragma once

#include <complex>

#include "holistic/grid_field.hpp"

namespace holistic {

/// Periodic finite-difference operators on integer grid indices.
///
/// Only integer-grid composites are exposed: the centred second difference
/// delta^2, the centred first difference mu*delta, the backward difference
/// nabla, the shift sigma^k, and the nonlocal smoother S = (1 + delta^2/6)^{-1}
/// together with its forward inverse.  Half-grid quantities (delta or mu on
/// their own) never materialise.
struct OperatorKind {
    enum class Tag { Shift, Delta2, MuDelta, Nabla, S, SInverse };

    Tag tag = Tag::Shift;
    int shift = 0;  // meaningful for Tag::Shift only; Shift(0) is the identity

    static OperatorKind Shift(int k) { return {Tag::Shift, k}; }
    static OperatorKind Delta2() { return {Tag::Delta2, 0}; }
    static OperatorKind MuDelta() { return {Tag::MuDelta, 0}; }
    static OperatorKind Nabla() { return {Tag::Nabla, 0}; }
    static OperatorKind S() { return {Tag::S, 0}; }
    static OperatorKind SInverse() { return {Tag::SInverse, 0}; }
};

/// Apply an operator to a periodic grid field.
///
/// S is computed by a cyclic tridiagonal solve (diagonal 2/3, off-diagonals
/// 1/6); the matrix is strictly diagonally dominant, hence always invertible.
GridField apply(OperatorKind op, const GridField& f);

/// Elementwise kernels on plain vectors (periodic indexing).
Eigen::VectorXd delta2(const Eigen::VectorXd& f);
Eigen::VectorXd mu_delta(const Eigen::VectorXd& f);
Eigen::VectorXd nabla(const Eigen::VectorXd& f);
Eigen::VectorXd shift(const Eigen::VectorXd& f, int k);
Eigen::VectorXd s_smooth(const Eigen::VectorXd& f);
Eigen::VectorXd s_inverse(const Eigen::VectorXd& f);

/// Fourier multiplier of the operator at nondimensional wavenumber kappa:
/// applying `op` to e^{i kappa j} multiplies it by symbol(op, kappa).
std::complex<double> symbol(OperatorKind op, double kappa);

/// Dense n x n matrix of the operator (columns = op applied to basis vectors).
Eigen::MatrixXd operator_matrix(OperatorKind op, Eigen::Index n);

}  // namespace holistic
