// hs_space.hpp: Hilbert-Schmidt space B2(H_N), sandwich operators, superoperators
//
// Flattening is row-major: X(i, j) lives at index i * N + j. Every superoperator
// in the library uses this ordering.

#pragma once

#include "mtk/linalg.hpp"

#include <functional>
#include <vector>

namespace mtk::hs {

/// An element X of B2(H_N).
struct HSVector {
    CMatrix data;

    HSVector() = default;
    explicit HSVector(CMatrix m);

    Index dim() const { return data.rows(); }
};

HSVector matrix_unit(Index n, Index i, Index j);

/// Tr[X* Y]; conjugate-linear in x.
Complex hs_inner(const HSVector& x, const HSVector& y);
double hs_norm(const HSVector& x);

/// A ∨ B, acting as X -> A X B*.
struct SandwichOp {
    CMatrix left;
    CMatrix right;

    SandwichOp(CMatrix a, CMatrix b);

    Index dim() const { return left.rows(); }
};

HSVector sandwich_apply(const SandwichOp& op, const HSVector& x);
/// (A1 ∨ B1)(A2 ∨ B2) = (A1 A2) ∨ (B1 B2).
SandwichOp sandwich_compose(const SandwichOp& p, const SandwichOp& q);
/// (A ∨ B)* = A* ∨ B*.
SandwichOp sandwich_adjoint(const SandwichOp& op);

/// Embeddings of the left and right algebras: A ∨ I and I ∨ A.
SandwichOp left_op(const CMatrix& a);
SandwichOp right_op(const CMatrix& a);

CVector flatten(const HSVector& x);
HSVector unflatten(const CVector& v, Index n);

/// Matrix of a real-linear map on flattened B2(H_N). A linear map acts as
/// v -> matrix * v; an antilinear one acts as v -> matrix * conj(v).
struct SuperOp {
    CMatrix matrix;
    bool antilinear = false;

    Index dim() const { return matrix.rows(); }
    /// N with N^2 = dim().
    Index base_dim() const;
};

using HSMap = std::function<HSVector(const HSVector&)>;

/// Columns are the flattened images of the matrix units. For an antilinear
/// map pass antilinear = true; the images of the (real) matrix units are then
/// exactly the columns of the linear part.
SuperOp superop_matrix(Index n, const HSMap& map, bool antilinear = false);
/// Closed form of A ∨ B: kron(A, conj(B)).
SuperOp sandwich_superop(const SandwichOp& op);
SuperOp identity_superop(Index n);
/// J X = X*.
SuperOp conjugation_superop(Index n);

CVector superop_apply(const SuperOp& op, const CVector& v);
HSVector superop_apply(const SuperOp& op, const HSVector& x);
/// a ∘ b.
SuperOp superop_compose(const SuperOp& a, const SuperOp& b);
/// Adjoint with respect to hs_inner. For antilinear maps this is the
/// antilinear map with <x, A y> = conj(<A* x, y>).
SuperOp superop_adjoint(const SuperOp& op);
double superop_distance(const SuperOp& a, const SuperOp& b);

struct Commutant {
    Index dim = 0;
    /// Orthonormal basis (Frobenius) of the commuting superoperators.
    std::vector<CMatrix> basis;
};

/// Null space of M -> [M, G] stacked over all generators, decided by
/// singular values below 1e-8 of the largest. Generators must be linear.
Commutant commutant_dim(const std::vector<SuperOp>& generators);

} // namespace mtk::hs
