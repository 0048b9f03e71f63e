// hs_space.cpp: Hilbert-Schmidt space B2(H_N), sandwich operators, superoperators

#include "mtk/hs_space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mtk::hs {

namespace {

void require_same_dim(Index a, Index b, const char* where) {
    if (a != b) {
        throw std::invalid_argument(std::string(where) + ": dimension mismatch (" + std::to_string(a) +
                                    " vs " + std::to_string(b) + ")");
    }
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

} // namespace

HSVector::HSVector(CMatrix m) : data(std::move(m)) {
    if (data.rows() != data.cols() || data.rows() == 0) {
        throw std::invalid_argument("HSVector: matrix must be square and non-empty");
    }
}

HSVector matrix_unit(Index n, Index i, Index j) {
    if (n < 1 || i < 0 || j < 0 || i >= n || j >= n) {
        throw std::out_of_range("matrix_unit: index (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") out of range for N = " + std::to_string(n));
    }
    CMatrix m = CMatrix::Zero(n, n);
    m(i, j) = 1.0;
    return HSVector(std::move(m));
}

Complex hs_inner(const HSVector& x, const HSVector& y) {
    require_same_dim(x.dim(), y.dim(), "hs_inner");
    // Tr[X* Y] = sum conj(X_ij) Y_ij
    return (x.data.conjugate().cwiseProduct(y.data)).sum();
}

double hs_norm(const HSVector& x) {
    return x.data.norm();
}

SandwichOp::SandwichOp(CMatrix a, CMatrix b) : left(std::move(a)), right(std::move(b)) {
    if (left.rows() != left.cols() || right.rows() != right.cols()) {
        throw std::invalid_argument("SandwichOp: factors must be square");
    }
    require_same_dim(left.rows(), right.rows(), "SandwichOp");
}

HSVector sandwich_apply(const SandwichOp& op, const HSVector& x) {
    require_same_dim(op.dim(), x.dim(), "sandwich_apply");
    return HSVector(op.left * x.data * op.right.adjoint());
}

SandwichOp sandwich_compose(const SandwichOp& p, const SandwichOp& q) {
    require_same_dim(p.dim(), q.dim(), "sandwich_compose");
    return {p.left * q.left, p.right * q.right};
}

SandwichOp sandwich_adjoint(const SandwichOp& op) {
    return {op.left.adjoint(), op.right.adjoint()};
}

SandwichOp left_op(const CMatrix& a) {
    return {a, CMatrix::Identity(a.rows(), a.cols())};
}

SandwichOp right_op(const CMatrix& a) {
    return {CMatrix::Identity(a.rows(), a.cols()), a};
}

CVector flatten(const HSVector& x) {
    const Index n = x.dim();
    CVector v(n * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) v(i * n + j) = x.data(i, j);
    return v;
}

HSVector unflatten(const CVector& v, Index n) {
    if (v.size() != n * n) {
        throw std::invalid_argument("unflatten: vector length " + std::to_string(v.size()) + " is not " +
                                    std::to_string(n) + "^2");
    }
    CMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) m(i, j) = v(i * n + j);
    return HSVector(std::move(m));
}

Index SuperOp::base_dim() const {
    const auto n = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(dim()))));
    if (n * n != dim()) throw std::logic_error("SuperOp: dimension is not a perfect square");
    return n;
}

SuperOp superop_matrix(Index n, const HSMap& map, bool antilinear) {
    SuperOp op{CMatrix(n * n, n * n), antilinear};
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            const HSVector image = map(matrix_unit(n, i, j));
            require_same_dim(image.dim(), n, "superop_matrix");
            op.matrix.col(i * n + j) = flatten(image);
        }
    }
    return op;
}

SuperOp sandwich_superop(const SandwichOp& op) {
    return {kron(op.left, op.right.conjugate()), false};
}

SuperOp identity_superop(Index n) {
    return {CMatrix::Identity(n * n, n * n), false};
}

SuperOp conjugation_superop(Index n) {
    SuperOp op{CMatrix::Zero(n * n, n * n), true};
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) op.matrix(i * n + j, j * n + i) = 1.0;
    return op;
}

CVector superop_apply(const SuperOp& op, const CVector& v) {
    require_same_dim(op.dim(), v.size(), "superop_apply");
    return op.antilinear ? CVector(op.matrix * v.conjugate()) : CVector(op.matrix * v);
}

HSVector superop_apply(const SuperOp& op, const HSVector& x) {
    return unflatten(superop_apply(op, flatten(x)), x.dim());
}

SuperOp superop_compose(const SuperOp& a, const SuperOp& b) {
    require_same_dim(a.dim(), b.dim(), "superop_compose");
    if (!a.antilinear) return {a.matrix * b.matrix, b.antilinear};
    return {a.matrix * b.matrix.conjugate(), !b.antilinear};
}

SuperOp superop_adjoint(const SuperOp& op) {
    if (op.antilinear) return {op.matrix.transpose(), true};
    return {op.matrix.adjoint(), false};
}

double superop_distance(const SuperOp& a, const SuperOp& b) {
    if (a.antilinear != b.antilinear) {
        throw std::invalid_argument("superop_distance: cannot compare a linear with an antilinear map");
    }
    return linalg::frobenius_distance(a.matrix, b.matrix);
}

Commutant commutant_dim(const std::vector<SuperOp>& generators) {
    if (generators.empty()) throw std::invalid_argument("commutant_dim: empty generator list");
    const Index d = generators.front().dim();
    for (const auto& g : generators) {
        require_same_dim(g.dim(), d, "commutant_dim");
        if (g.antilinear) throw std::invalid_argument("commutant_dim: generators must be linear");
    }
    // vec(M G - G M) = (I ⊗ G^T - G ⊗ I) vec(M), row-major vec.
    const CMatrix id = CMatrix::Identity(d, d);
    const Index block = d * d;
    CMatrix stacked(block * static_cast<Index>(generators.size()), block);
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const CMatrix& g = generators[k].matrix;
        stacked.middleRows(static_cast<Index>(k) * block, block) = kron(id, g.transpose()) - kron(g, id);
    }
    Eigen::BDCSVD<CMatrix> svd(stacked, Eigen::ComputeFullV);
    const RVector& sigma = svd.singularValues();
    const double threshold = sigma.size() > 0 ? 1e-8 * sigma(0) : 0.0;
    Commutant out;
    for (Index c = 0; c < block; ++c) {
        const double s = c < sigma.size() ? sigma(c) : 0.0;
        if (s > threshold) continue;
        CMatrix m(d, d);
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j) m(i, j) = svd.matrixV()(i * d + j, c);
        out.basis.push_back(std::move(m));
    }
    out.dim = static_cast<Index>(out.basis.size());
    return out;
}

} // namespace mtk::hs
