// landau.hpp: Landau levels on a truncated two-mode oscillator space
//
// Two-mode states use lexicographic labels: |n_x, n_y> sits at n_x * Ncut + n_y,
// so a_x = a ⊗ I and a_y = I ⊗ a.

#pragma once

#include "mtk/hs_space.hpp"
#include "mtk/linalg.hpp"

#include <Eigen/Sparse>

#include <vector>

namespace mtk::landau {

using SparseOp = Eigen::SparseMatrix<Complex>;

struct ModeCut {
    Index ncut;

    explicit ModeCut(Index n);
    Index dim() const { return ncut * ncut; }
    /// Largest total quanta n_x + n_y on which truncated identities are exact.
    Index interior_level() const { return ncut - 4; }
};

struct FockLabel {
    Index n = 0;
    Index l = 0;
};

/// Single-mode annihilation matrix: a(n-1, n) = sqrt(n).
CMatrix ladder(Index n);

/// Normalized Hermite function zeta_n(x) by three-term recurrence.
double hermite_fn(Index n, double x);

/// Single-mode position and momentum, (a + a*)/sqrt2 and (a - a*)/(i sqrt2).
CMatrix position(Index n);
CMatrix momentum(Index n);

enum class LadderForm { derived, literal };

struct LandauLadders {
    SparseOp A_plus;
    SparseOp A_plus_dag;
    SparseOp A_minus;
    SparseOp A_minus_dag;
};

/// A+ = 3/4 (a_x - i a_y) - 1/4 (a_x* - i a_y*), A- = 3/4 (a_x + i a_y) - 1/4 (a_x* + i a_y*).
/// The literal form writes the last term of A+ as -1/4 (a_x* + i a_y*).
LandauLadders build_A_pm(const ModeCut& cut, LadderForm form = LadderForm::derived);

/// The same operators assembled from Q+- and P+-:
/// A+ = (Q+ + i P+)/sqrt2, A- = (i Q- - P-)/sqrt2 with
/// Q+- = p_y + x/2 or p_x + y/2, P+- = p_x - y/2 or p_y - x/2.
LandauLadders build_A_pm_from_qp(const ModeCut& cut);

struct Hamiltonians {
    SparseOp N_plus;
    SparseOp N_minus;
    SparseOp H_up;
    SparseOp H_down;
    SparseOp H_0;
    SparseOp H_int_up;
    SparseOp H_int_down;
};

Hamiltonians hamiltonians(const ModeCut& cut);

/// Indices of |n_x, n_y> with n_x + n_y <= level.
std::vector<Index> interior_indices(const ModeCut& cut, Index level);

/// Largest entry of |lhs - rhs| over interior columns.
double interior_deviation(const ModeCut& cut, const SparseOp& lhs, const SparseOp& rhs);
/// Norm of v restricted to interior rows.
double interior_norm(const ModeCut& cut, const CVector& v);

SparseOp commutator(const SparseOp& a, const SparseOp& b);
SparseOp sparse_identity(Index dim);

/// Joint eigenbasis Psi_nl = (A+*)^n (A-*)^l Psi_00 / sqrt(n! l!).
///
/// Psi_00 is the kernel of A+ and A- on a wider working cut W, solved one
/// total-quanta shell at a time; the kernel is one-dimensional exactly when
/// every shell solve is injective, which is checked. States are built in the
/// working cut and then projected onto the Ncut square and renormalized;
/// tail_norm reports the discarded weight.
class LandauBasis {
public:
    LandauBasis(const ModeCut& cut, Index max_level);

    const ModeCut& cut() const { return cut_; }
    Index working_cut() const { return w_; }
    Index max_level() const { return max_level_; }

    /// Projected and renormalized Psi_nl on the Ncut^2 space.
    CVector psi(const FockLabel& label) const;
    /// Psi_nl in the working cut, as a W x W grid indexed (n_x, n_y).
    CMatrix psi_working(const FockLabel& label) const;
    /// Norm of the part of the working-cut state outside the Ncut square.
    double tail_norm(const FockLabel& label) const;
    /// max |A+- Psi_00| over working rows of total quanta <= W - 2.
    double vacuum_residual() const;
    /// Smallest singular value met while solving the shells.
    double min_shell_singular_value() const { return min_sigma_; }

private:
    void check_label(const FockLabel& label) const;

    ModeCut cut_;
    Index max_level_;
    Index w_;
    CMatrix vacuum_;
    double min_sigma_ = 0.0;
};

/// Convenience wrapper: builds a LandauBasis sized for the label.
CVector fock_psi(const ModeCut& cut, const FockLabel& label);

/// The antiunitary intertwiner: complex conjugation of Fock coefficients.
CVector intertwiner(const CVector& v);
SparseOp intertwine(const SparseOp& op);

/// (2 pi)^{-1/2} Tr[U(x, y)* X] with U = exp(-i (x Q + y P)) on the
/// single-mode truncation of dimension X.dim().
Complex wigner_sample(const hs::HSVector& x_op, double x, double y);

/// The displacement-type unitary U(x, y) used by wigner_sample.
CMatrix wigner_unitary(Index ncut, double x, double y);

} // namespace mtk::landau
