// modular.hpp: Gibbs state, modular triple (S, J, Delta), modular flow, KMS function

#pragma once

#include "mtk/hs_space.hpp"
#include "mtk/linalg.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mtk::modular {

/// alpha_n proportional to exp(-n beta), renormalized over n < N.
struct GibbsWeights {
    double beta = 0.0;
    Index n = 0;
    RVector alpha;
    RVector log_alpha;

    /// Energies E_i = -(1/beta) log alpha_i.
    RVector energies() const;
    CMatrix density() const;
};

/// Throws std::invalid_argument for beta <= 0 or N < 2, and
/// std::overflow_error if a weight underflows to zero.
GibbsWeights build_weights(double beta, Index n);

/// Phi = sum sqrt(alpha_i) X_ii.
hs::HSVector cyclic_vector(const GibbsWeights& w);

/// Tr[rho A].
Complex state_eval(const GibbsWeights& w, const CMatrix& a);

struct ModularTriple {
    hs::SuperOp J;
    hs::SuperOp Delta;
    hs::SuperOp S;
    CMatrix Hphi;
    hs::SuperOp bigH;
};

/// Delta and S are assembled entrywise from the weight ratios; J is the
/// conjugate-transpose map; bigH = Hphi ∨ I - I ∨ Hphi.
ModularTriple build_modular_triple(const GibbsWeights& w);

/// J Delta^(1/2), with the square root taken by spectral calculus.
hs::SuperOp polar_S(const ModularTriple& m);
/// exp(-beta bigH) by spectral calculus.
hs::SuperOp delta_from_hamiltonian(const GibbsWeights& w, const ModularTriple& m);

/// exp(i Hphi t) A exp(-i Hphi t).
CMatrix modular_flow(const GibbsWeights& w, double t, const CMatrix& a);
/// Delta^(-it/beta) applied to A as a vector of B2(H_N).
CMatrix modular_flow_delta(const GibbsWeights& w, const ModularTriple& m, double t, const CMatrix& a);

/// F(z) = sum_jk rho_j A_jk B_kj exp(i z (E_k - E_j)). Throws
/// std::overflow_error when |Im z| times the energy spread exceeds 700.
Complex kms_F(const GibbsWeights& w, const CMatrix& a, const CMatrix& b, Complex z);

/// max over t of |F(t + i beta) - phi(flow_t(B) A)|.
double kms_boundary_check(const GibbsWeights& w, const CMatrix& a, const CMatrix& b,
                          const std::vector<double>& t_grid);

struct CentralizerResult {
    bool member = false;
    /// Largest offending entry of [B, rho] when not a member.
    std::optional<std::pair<Index, Index>> witness;
    double max_commutator = 0.0;
};

/// [B, rho] = 0 within 1e-10 max(1, ||B||_F). Throws std::invalid_argument
/// if the weights are not pairwise distinct.
CentralizerResult centralizer_member(const GibbsWeights& w, const CMatrix& b);

/// Exhaustive oracle: phi([B, X_kl]) = 0 for every matrix unit.
bool centralizer_by_pairing(const GibbsWeights& w, const CMatrix& b, double tol = 1e-10);

} // namespace mtk::modular
