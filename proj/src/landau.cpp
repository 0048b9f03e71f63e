// landau.cpp: Landau levels on a truncated two-mode oscillator space

#include "mtk/landau.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mtk::landau {

namespace {

using Triplet = Eigen::Triplet<Complex>;

SparseOp kron(const CMatrix& a, const CMatrix& b) {
    std::vector<Triplet> entries;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) {
            if (a(i, j) == Complex(0.0)) continue;
            for (Index k = 0; k < b.rows(); ++k)
                for (Index l = 0; l < b.cols(); ++l) {
                    if (b(k, l) == Complex(0.0)) continue;
                    entries.emplace_back(i * b.rows() + k, j * b.cols() + l, a(i, j) * b(k, l));
                }
        }
    SparseOp out(a.rows() * b.rows(), a.cols() * b.cols());
    out.setFromTriplets(entries.begin(), entries.end());
    return out;
}

struct ModeOps {
    SparseOp ax, ax_dag, ay, ay_dag;
};

ModeOps mode_ops(const ModeCut& cut) {
    const CMatrix a = ladder(cut.ncut);
    const CMatrix id = CMatrix::Identity(cut.ncut, cut.ncut);
    return {kron(a, id), kron(a.adjoint(), id), kron(id, a), kron(id, a.adjoint())};
}

SparseOp adjoint_of(const SparseOp& m) {
    return SparseOp(m.adjoint());
}

// Ladder actions on a W x W grid of coefficients c(n_x, n_y).
CMatrix lower_x(const CMatrix& g) {
    CMatrix out = CMatrix::Zero(g.rows(), g.cols());
    for (Index i = 0; i + 1 < g.rows(); ++i) out.row(i) = std::sqrt(static_cast<double>(i + 1)) * g.row(i + 1);
    return out;
}

CMatrix raise_x(const CMatrix& g) {
    CMatrix out = CMatrix::Zero(g.rows(), g.cols());
    for (Index i = 1; i < g.rows(); ++i) out.row(i) = std::sqrt(static_cast<double>(i)) * g.row(i - 1);
    return out;
}

CMatrix lower_y(const CMatrix& g) {
    CMatrix out = CMatrix::Zero(g.rows(), g.cols());
    for (Index j = 0; j + 1 < g.cols(); ++j) out.col(j) = std::sqrt(static_cast<double>(j + 1)) * g.col(j + 1);
    return out;
}

CMatrix raise_y(const CMatrix& g) {
    CMatrix out = CMatrix::Zero(g.rows(), g.cols());
    for (Index j = 1; j < g.cols(); ++j) out.col(j) = std::sqrt(static_cast<double>(j)) * g.col(j - 1);
    return out;
}

CMatrix grid_A_plus(const CMatrix& g) {
    return 0.75 * (lower_x(g) - kI * lower_y(g)) - 0.25 * (raise_x(g) - kI * raise_y(g));
}

CMatrix grid_A_minus(const CMatrix& g) {
    return 0.75 * (lower_x(g) + kI * lower_y(g)) - 0.25 * (raise_x(g) + kI * raise_y(g));
}

CMatrix grid_A_plus_dag(const CMatrix& g) {
    return 0.75 * (raise_x(g) + kI * raise_y(g)) - 0.25 * (lower_x(g) + kI * lower_y(g));
}

CMatrix grid_A_minus_dag(const CMatrix& g) {
    return 0.75 * (raise_x(g) - kI * raise_y(g)) - 0.25 * (lower_x(g) - kI * lower_y(g));
}

double shell_norm(const CMatrix& g, Index max_total) {
    double sum = 0.0;
    for (Index i = 0; i < g.rows(); ++i)
        for (Index j = 0; j < g.cols() && i + j <= max_total; ++j) sum += std::norm(g(i, j));
    return std::sqrt(sum);
}

double factorial(Index n) {
    return std::tgamma(static_cast<double>(n) + 1.0);
}

} // namespace

ModeCut::ModeCut(Index n) : ncut(n) {
    if (n < 2) throw std::invalid_argument("ModeCut: Ncut must be at least 2");
}

CMatrix ladder(Index n) {
    if (n < 2) throw std::invalid_argument("ladder: dimension must be at least 2");
    CMatrix a = CMatrix::Zero(n, n);
    for (Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    return a;
}

double hermite_fn(Index n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_fn: negative order");
    double prev = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    if (n == 0) return prev;
    double cur = std::sqrt(2.0) * x * prev;
    for (Index k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double next = std::sqrt(2.0 / (kk + 1.0)) * x * cur - std::sqrt(kk / (kk + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

CMatrix position(Index n) {
    const CMatrix a = ladder(n);
    return (a + a.adjoint()) / std::sqrt(2.0);
}

CMatrix momentum(Index n) {
    const CMatrix a = ladder(n);
    return (a - a.adjoint()) / (kI * std::sqrt(2.0));
}

LandauLadders build_A_pm(const ModeCut& cut, LadderForm form) {
    const ModeOps m = mode_ops(cut);
    LandauLadders out;
    out.A_plus = 0.75 * (m.ax - kI * m.ay) - 0.25 * (m.ax_dag - kI * m.ay_dag);
    if (form == LadderForm::literal) {
        out.A_plus = 0.75 * (m.ax - kI * m.ay) - 0.25 * (m.ax_dag + kI * m.ay_dag);
    }
    out.A_minus = 0.75 * (m.ax + kI * m.ay) - 0.25 * (m.ax_dag + kI * m.ay_dag);
    out.A_plus_dag = adjoint_of(out.A_plus);
    out.A_minus_dag = adjoint_of(out.A_minus);
    return out;
}

LandauLadders build_A_pm_from_qp(const ModeCut& cut) {
    const CMatrix id = CMatrix::Identity(cut.ncut, cut.ncut);
    const CMatrix q = position(cut.ncut);
    const CMatrix p = momentum(cut.ncut);
    const SparseOp x = kron(q, id);
    const SparseOp px = kron(p, id);
    const SparseOp y = kron(id, q);
    const SparseOp py = kron(id, p);
    const SparseOp q_minus = px + 0.5 * y;
    const SparseOp p_minus = py - 0.5 * x;
    const SparseOp q_plus = py + 0.5 * x;
    const SparseOp p_plus = px - 0.5 * y;
    const double r = 1.0 / std::sqrt(2.0);
    LandauLadders out;
    out.A_plus = r * (q_plus + kI * p_plus);
    out.A_minus = r * (kI * q_minus - p_minus);
    out.A_plus_dag = adjoint_of(out.A_plus);
    out.A_minus_dag = adjoint_of(out.A_minus);
    return out;
}

Hamiltonians hamiltonians(const ModeCut& cut) {
    const LandauLadders l = build_A_pm(cut);
    const SparseOp id = sparse_identity(cut.dim());
    Hamiltonians h;
    h.N_plus = l.A_plus_dag * l.A_plus;
    h.N_minus = l.A_minus_dag * l.A_minus;
    h.H_up = h.N_minus + 0.5 * id;
    h.H_down = h.N_plus + 0.5 * id;
    h.H_0 = 0.5 * (h.N_plus + h.N_minus + id);
    h.H_int_up = -0.5 * (h.N_plus - h.N_minus);
    h.H_int_down = 0.5 * (h.N_plus - h.N_minus);
    return h;
}

std::vector<Index> interior_indices(const ModeCut& cut, Index level) {
    std::vector<Index> out;
    for (Index nx = 0; nx < cut.ncut; ++nx)
        for (Index ny = 0; ny < cut.ncut; ++ny)
            if (nx + ny <= level) out.push_back(nx * cut.ncut + ny);
    return out;
}

double interior_deviation(const ModeCut& cut, const SparseOp& lhs, const SparseOp& rhs) {
    const SparseOp diff = lhs - rhs;
    double worst = 0.0;
    for (Index c : interior_indices(cut, cut.interior_level())) {
        for (SparseOp::InnerIterator it(diff, c); it; ++it) worst = std::max(worst, std::abs(it.value()));
    }
    return worst;
}

double interior_norm(const ModeCut& cut, const CVector& v) {
    double sum = 0.0;
    for (Index r : interior_indices(cut, cut.interior_level())) sum += std::norm(v(r));
    return std::sqrt(sum);
}

SparseOp commutator(const SparseOp& a, const SparseOp& b) {
    return SparseOp(a * b) - SparseOp(b * a);
}

SparseOp sparse_identity(Index dim) {
    SparseOp id(dim, dim);
    id.setIdentity();
    return id;
}

LandauBasis::LandauBasis(const ModeCut& cut, Index max_level)
    : cut_(cut), max_level_(max_level), w_(std::max<Index>(2 * cut.ncut + max_level, 40)) {
    if (max_level < 0) throw std::invalid_argument("LandauBasis: negative level");
    if (max_level > cut.ncut - 2) {
        throw std::out_of_range("LandauBasis: level " + std::to_string(max_level) + " exceeds Ncut - 2 = " +
                                std::to_string(cut.ncut - 2));
    }
    // Shell t holds |k, t - k>, k = 0..t. Rows of total t couple shell t + 1
    // through the lowering part and shell t - 1 through the raising part.
    std::vector<CVector> shells(static_cast<std::size_t>(w_));
    shells[0] = CVector::Ones(1);
    min_sigma_ = std::numeric_limits<double>::infinity();
    for (Index t = 0; t + 1 < w_; ++t) {
        const Index rows = 2 * (t + 1);
        CMatrix lower = CMatrix::Zero(rows, t + 2);
        for (Index k = 0; k <= t + 1; ++k) {
            const double sx = std::sqrt(static_cast<double>(k));
            const double sy = std::sqrt(static_cast<double>(t + 1 - k));
            if (k >= 1) {
                lower(k - 1, k) += 0.75 * sx;
                lower(t + 1 + k - 1, k) += 0.75 * sx;
            }
            if (k <= t) {
                lower(k, k) += -0.75 * kI * sy;
                lower(t + 1 + k, k) += 0.75 * kI * sy;
            }
        }
        CVector rhs = CVector::Zero(rows);
        if (t >= 1) {
            const CVector& prev = shells[static_cast<std::size_t>(t - 1)];
            for (Index k = 0; k < t; ++k) {
                const double sx = std::sqrt(static_cast<double>(k + 1));
                const double sy = std::sqrt(static_cast<double>(t - k));
                // -(raising part) applied to |k, t-1-k>
                rhs(k + 1) -= -0.25 * sx * prev(k);
                rhs(k) -= 0.25 * kI * sy * prev(k);
                rhs(t + 1 + k + 1) -= -0.25 * sx * prev(k);
                rhs(t + 1 + k) -= -0.25 * kI * sy * prev(k);
            }
        }
        Eigen::BDCSVD<CMatrix> svd(lower, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const double smin = svd.singularValues()(svd.singularValues().size() - 1);
        min_sigma_ = std::min(min_sigma_, smin);
        if (!(smin > 1e-8 * svd.singularValues()(0))) {
            throw std::runtime_error("LandauBasis: kernel of A+ and A- is not one-dimensional at shell " +
                                     std::to_string(t + 1));
        }
        shells[static_cast<std::size_t>(t + 1)] = svd.solve(rhs);
    }
    vacuum_ = CMatrix::Zero(w_, w_);
    for (Index t = 0; t < w_; ++t)
        for (Index k = 0; k <= t; ++k) vacuum_(k, t - k) = shells[static_cast<std::size_t>(t)](k);
    vacuum_ /= vacuum_.norm();
}

void LandauBasis::check_label(const FockLabel& label) const {
    if (label.n < 0 || label.l < 0 || label.n + label.l > max_level_) {
        throw std::out_of_range("LandauBasis: label (" + std::to_string(label.n) + ", " + std::to_string(label.l) +
                                ") exceeds level " + std::to_string(max_level_));
    }
}

CMatrix LandauBasis::psi_working(const FockLabel& label) const {
    check_label(label);
    CMatrix g = vacuum_;
    for (Index k = 0; k < label.l; ++k) g = grid_A_minus_dag(g);
    for (Index k = 0; k < label.n; ++k) g = grid_A_plus_dag(g);
    return g / std::sqrt(factorial(label.n) * factorial(label.l));
}

CVector LandauBasis::psi(const FockLabel& label) const {
    const CMatrix g = psi_working(label);
    const Index n = cut_.ncut;
    CVector v(n * n);
    for (Index nx = 0; nx < n; ++nx)
        for (Index ny = 0; ny < n; ++ny) v(nx * n + ny) = g(nx, ny);
    return v / v.norm();
}

double LandauBasis::tail_norm(const FockLabel& label) const {
    CMatrix g = psi_working(label);
    g.topLeftCorner(cut_.ncut, cut_.ncut).setZero();
    return g.norm();
}

double LandauBasis::vacuum_residual() const {
    return std::max(shell_norm(grid_A_plus(vacuum_), w_ - 2), shell_norm(grid_A_minus(vacuum_), w_ - 2));
}

CVector fock_psi(const ModeCut& cut, const FockLabel& label) {
    return LandauBasis(cut, label.n + label.l).psi(label);
}

CVector intertwiner(const CVector& v) {
    return v.conjugate();
}

SparseOp intertwine(const SparseOp& op) {
    return SparseOp(op.conjugate());
}

CMatrix wigner_unitary(Index ncut, double x, double y) {
    const CMatrix gen = x * position(ncut) + y * momentum(ncut);
    const CMatrix herm = (gen + gen.adjoint()) / 2.0;
    return linalg::func_calculus(linalg::hermitian_eig(herm), [](double lambda) { return std::exp(-kI * lambda); });
}

Complex wigner_sample(const hs::HSVector& x_op, double x, double y) {
    const CMatrix u = wigner_unitary(x_op.dim(), x, y);
    return (u.conjugate().cwiseProduct(x_op.data)).sum() / std::sqrt(2.0 * std::numbers::pi);
}

} // namespace mtk::landau
