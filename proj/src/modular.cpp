// modular.cpp: Gibbs state, modular triple (S, J, Delta), modular flow, KMS function

#include "mtk/modular.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mtk::modular {

namespace {

void require_square(const GibbsWeights& w, const CMatrix& a, const char* where) {
    if (a.rows() != w.n || a.cols() != w.n) {
        throw std::invalid_argument(std::string(where) + ": operator must be " + std::to_string(w.n) + "x" +
                                    std::to_string(w.n));
    }
}

} // namespace

RVector GibbsWeights::energies() const {
    return -log_alpha / beta;
}

CMatrix GibbsWeights::density() const {
    return alpha.cast<Complex>().asDiagonal();
}

GibbsWeights build_weights(double beta, Index n) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("build_weights: beta must be positive and finite");
    }
    if (n < 2) throw std::invalid_argument("build_weights: N must be at least 2");
    GibbsWeights w;
    w.beta = beta;
    w.n = n;
    w.alpha.resize(n);
    w.log_alpha.resize(n);
    // (1 - e^{-beta}) / (1 - e^{-N beta})
    const double log_norm = std::log(-std::expm1(-beta)) - std::log(-std::expm1(-beta * static_cast<double>(n)));
    for (Index i = 0; i < n; ++i) {
        w.log_alpha(i) = log_norm - beta * static_cast<double>(i);
        w.alpha(i) = std::exp(w.log_alpha(i));
        if (!(w.alpha(i) > 0.0)) {
            std::ostringstream msg;
            msg << "build_weights: alpha_" << i << " underflows at beta = " << beta;
            throw std::overflow_error(msg.str());
        }
    }
    return w;
}

hs::HSVector cyclic_vector(const GibbsWeights& w) {
    return hs::HSVector(CMatrix(w.alpha.cwiseSqrt().cast<Complex>().asDiagonal()));
}

Complex state_eval(const GibbsWeights& w, const CMatrix& a) {
    require_square(w, a, "state_eval");
    return (w.alpha.cast<Complex>().array() * a.diagonal().array()).sum();
}

ModularTriple build_modular_triple(const GibbsWeights& w) {
    const Index n = w.n;
    const Index d = n * n;
    ModularTriple m;
    m.J = hs::conjugation_superop(n);
    m.Delta = {CMatrix::Zero(d, d), false};
    m.S = {CMatrix::Zero(d, d), true};
    for (Index k = 0; k < n; ++k) {
        for (Index l = 0; l < n; ++l) {
            const double log_ratio = w.log_alpha(k) - w.log_alpha(l);
            m.Delta.matrix(k * n + l, k * n + l) = std::exp(log_ratio);
            // S X_kl = sqrt(alpha_k / alpha_l) X_lk
            m.S.matrix(l * n + k, k * n + l) = std::exp(0.5 * log_ratio);
        }
    }
    m.Hphi = w.energies().cast<Complex>().asDiagonal();
    m.bigH = {hs::sandwich_superop(hs::left_op(m.Hphi)).matrix - hs::sandwich_superop(hs::right_op(m.Hphi)).matrix,
              false};
    return m;
}

hs::SuperOp polar_S(const ModularTriple& m) {
    const auto eig = linalg::hermitian_eig(m.Delta.matrix);
    const hs::SuperOp root{linalg::func_calculus(eig, [](double x) { return Complex(std::sqrt(x), 0.0); }), false};
    return hs::superop_compose(m.J, root);
}

hs::SuperOp delta_from_hamiltonian(const GibbsWeights& w, const ModularTriple& m) {
    const auto eig = linalg::hermitian_eig(m.bigH.matrix);
    const double beta = w.beta;
    return {linalg::func_calculus(eig, [beta](double x) { return Complex(std::exp(-beta * x), 0.0); }), false};
}

CMatrix modular_flow(const GibbsWeights& w, double t, const CMatrix& a) {
    require_square(w, a, "modular_flow");
    const CMatrix u = linalg::unitary_exp(w.energies().cast<Complex>().asDiagonal(), t);
    return u * a * u.adjoint();
}

CMatrix modular_flow_delta(const GibbsWeights& w, const ModularTriple& m, double t, const CMatrix& a) {
    require_square(w, a, "modular_flow_delta");
    const auto eig = linalg::hermitian_eig(m.Delta.matrix);
    const double s = -t / w.beta;
    // Delta^{is} = exp(i s log Delta)
    const hs::SuperOp power{linalg::func_calculus(eig, [s](double x) { return std::exp(kI * s * std::log(x)); }),
                            false};
    return hs::superop_apply(power, hs::HSVector(a)).data;
}

Complex kms_F(const GibbsWeights& w, const CMatrix& a, const CMatrix& b, Complex z) {
    require_square(w, a, "kms_F");
    require_square(w, b, "kms_F");
    const RVector e = w.energies();
    const double spread = e.maxCoeff() - e.minCoeff();
    if (std::abs(z.imag()) * spread > 700.0) {
        std::ostringstream msg;
        msg << "kms_F: |Im z| * spread(E) = " << std::abs(z.imag()) * spread << " exceeds 700";
        throw std::overflow_error(msg.str());
    }
    Complex sum = 0.0;
    for (Index j = 0; j < w.n; ++j) {
        Complex row = 0.0;
        for (Index k = 0; k < w.n; ++k) {
            row += a(j, k) * b(k, j) * std::exp(kI * z * (e(k) - e(j)));
        }
        sum += w.alpha(j) * row;
    }
    return sum;
}

double kms_boundary_check(const GibbsWeights& w, const CMatrix& a, const CMatrix& b,
                          const std::vector<double>& t_grid) {
    double worst = 0.0;
    for (double t : t_grid) {
        const Complex lhs = kms_F(w, a, b, Complex(t, w.beta));
        const Complex rhs = state_eval(w, modular_flow(w, t, b) * a);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

CentralizerResult centralizer_member(const GibbsWeights& w, const CMatrix& b) {
    require_square(w, b, "centralizer_member");
    for (Index i = 0; i < w.n; ++i)
        for (Index j = i + 1; j < w.n; ++j)
            if (w.alpha(i) == w.alpha(j)) {
                throw std::invalid_argument("centralizer_member: weights are not pairwise distinct");
            }
    CentralizerResult out;
    Index wi = 0;
    Index wj = 0;
    for (Index i = 0; i < w.n; ++i) {
        for (Index j = 0; j < w.n; ++j) {
            // [B, rho]_ij = B_ij (alpha_j - alpha_i)
            const double mag = std::abs(b(i, j) * (w.alpha(j) - w.alpha(i)));
            if (mag > out.max_commutator) {
                out.max_commutator = mag;
                wi = i;
                wj = j;
            }
        }
    }
    out.member = out.max_commutator <= 1e-10 * std::max(1.0, b.norm());
    if (!out.member) out.witness = std::make_pair(wi, wj);
    return out;
}

bool centralizer_by_pairing(const GibbsWeights& w, const CMatrix& b, double tol) {
    require_square(w, b, "centralizer_by_pairing");
    for (Index k = 0; k < w.n; ++k) {
        for (Index l = 0; l < w.n; ++l) {
            const CMatrix x = hs::matrix_unit(w.n, k, l).data;
            if (std::abs(state_eval(w, linalg::commutator(b, x))) > tol * std::max(1.0, b.norm())) return false;
        }
    }
    return true;
}

} // namespace mtk::modular
