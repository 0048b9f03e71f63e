// linalg.hpp: dense complex matrices and Hermitian spectral calculus

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>

namespace mtk {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};

} // namespace mtk

namespace mtk::linalg {

// Floor applied to every norm-relative tolerance.
inline constexpr double kAbsoluteFloor = 1e-14;

/// Bound for a comparison against a reference of Frobenius norm `reference_norm`:
/// max(rel * reference_norm, kAbsoluteFloor).
double scaled_bound(double rel, double reference_norm);

CMatrix identity(Index n);

CMatrix adjoint(const CMatrix& a);

/// AB - BA. Throws std::invalid_argument unless both are square of equal size.
CMatrix commutator(const CMatrix& a, const CMatrix& b);

double frobenius_distance(const CMatrix& a, const CMatrix& b);

bool is_hermitian(const CMatrix& a, double rel = 1e-10);

/// Spectral data of a Hermitian matrix: ascending eigenvalues, unitary
/// eigenvector columns.
struct HermitianEig {
    RVector eigenvalues;
    CMatrix eigenvectors;

    Index dim() const { return eigenvalues.size(); }
    CMatrix reconstruct() const;
};

/// Throws std::invalid_argument if `a` is not square or
/// ||a - a*||_F > 1e-10 ||a||_F.
HermitianEig hermitian_eig(const CMatrix& a);

using ScalarMap = std::function<Complex(double)>;

/// U diag(f(lambda)) U*. Throws std::overflow_error naming the eigenvalue
/// when f is not finite there.
CMatrix func_calculus(const HermitianEig& eig, const ScalarMap& f);

/// exp(i t H) for Hermitian H, via the eigendecomposition.
CMatrix unitary_exp(const CMatrix& h, double t);

} // namespace mtk::linalg
