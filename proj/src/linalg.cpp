// linalg.cpp: dense complex matrices and Hermitian spectral calculus

#include "mtk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mtk::linalg {

double scaled_bound(double rel, double reference_norm) {
    return std::max(rel * reference_norm, kAbsoluteFloor);
}

CMatrix identity(Index n) {
    return CMatrix::Identity(n, n);
}

CMatrix adjoint(const CMatrix& a) {
    return a.adjoint();
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw std::invalid_argument("commutator: operands must be square with equal dimension");
    }
    return a * b - b * a;
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("frobenius_distance: dimension mismatch");
    }
    return (a - b).norm();
}

bool is_hermitian(const CMatrix& a, double rel) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).norm() <= scaled_bound(rel, a.norm());
}

CMatrix HermitianEig::reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

HermitianEig hermitian_eig(const CMatrix& a) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw std::invalid_argument("hermitian_eig: matrix must be square and non-empty");
    }
    if (!is_hermitian(a)) {
        throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eig: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix func_calculus(const HermitianEig& eig, const ScalarMap& f) {
    CVector values(eig.dim());
    for (Index i = 0; i < eig.dim(); ++i) {
        const Complex v = f(eig.eigenvalues(i));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "func_calculus: f is not finite at eigenvalue " << eig.eigenvalues(i)
                << " (index " << i << ")";
            throw std::overflow_error(msg.str());
        }
        values(i) = v;
    }
    return eig.eigenvectors * values.asDiagonal() * eig.eigenvectors.adjoint();
}

CMatrix unitary_exp(const CMatrix& h, double t) {
    return func_calculus(hermitian_eig(h), [t](double lambda) { return std::exp(kI * lambda * t); });
}

} // namespace mtk::linalg
