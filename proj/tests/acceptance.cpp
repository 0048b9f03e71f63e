// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "mtk/coherent.hpp"
#include "mtk/complex_hermite.hpp"
#include "mtk/hs_space.hpp"
#include "mtk/landau.hpp"
#include "mtk/modular.hpp"
#include "mtk/quadrature.hpp"
#include "mtk/random.hpp"
#include "mtk/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

using namespace mtk;
using linalg::scaled_bound;

namespace {

// A criterion is a list of measured errors, each with its own bound.
struct Part {
    std::string what;
    double error;
    double bound;
    bool ok() const { return std::isfinite(error) && error <= bound; }
};

struct Outcome {
    std::vector<Part> parts;
    void add(std::string what, double error, double bound) { parts.push_back({std::move(what), error, bound}); }
};

const double kLn2 = std::log(2.0);

Outcome ac_modular_triple() {
    Outcome o;
    const auto w = modular::build_weights(0.7, 16);
    const auto m = modular::build_modular_triple(w);
    o.add("||S - J Delta^(1/2)||", hs::superop_distance(m.S, modular::polar_S(m)), scaled_bound(1e-12, m.S.matrix.norm()));
    const hs::SuperOp sts = hs::superop_compose(hs::superop_adjoint(m.S), m.S);
    o.add("||Delta - S* S||", hs::superop_distance(m.Delta, sts), scaled_bound(1e-12, m.Delta.matrix.norm()));
    const hs::HSVector phi = modular::cyclic_vector(w);
    o.add("||J Phi - Phi||", (hs::superop_apply(m.J, phi).data - phi.data).norm(), 1e-13);
    o.add("||Delta Phi - Phi||", (hs::superop_apply(m.Delta, phi).data - phi.data).norm(), 1e-13);
    return o;
}

Outcome ac_kms() {
    Outcome o;
    const auto w = modular::build_weights(0.7, 16);
    SplitMix64 rng(42);
    const std::vector<double> grid{-2.0, -1.0, 0.0, 1.0, 2.0};
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const CMatrix a = random_square(rng, 16);
        const CMatrix b = random_square(rng, 16);
        for (double t : grid) {
            const Complex lhs = modular::kms_F(w, a, b, Complex(t, 0.7));
            const Complex rhs = modular::state_eval(w, modular::modular_flow(w, t, b) * a);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    o.add("|F(t + i beta) - phi(sigma_t(B) A)|, 20 pairs", worst, 1e-10);
    const CMatrix x01 = hs::matrix_unit(16, 0, 1).data;
    const CMatrix x10 = hs::matrix_unit(16, 1, 0).data;
    double closed = 0.0;
    for (double t : grid) {
        const Complex phase = std::exp(kI * t);
        closed = std::max(closed, std::abs(modular::kms_F(w, x01, x10, Complex(t, 0.0)) - w.alpha(0) * phase));
        closed = std::max(closed, std::abs(modular::kms_F(w, x01, x10, Complex(t, 0.7)) - w.alpha(1) * phase));
    }
    o.add("(X_01, X_10) closed form", closed, 1e-13);
    return o;
}

Outcome ac_commutant() {
    Outcome o;
    const Index n = 3;
    std::vector<hs::SuperOp> left;
    std::vector<hs::SuperOp> both;
    std::vector<CMatrix> right;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            const CMatrix x = hs::matrix_unit(n, i, j).data;
            left.push_back(hs::sandwich_superop(hs::left_op(x)));
            right.push_back(hs::sandwich_superop(hs::right_op(x)).matrix);
        }
    both = left;
    for (const auto& r : right) both.push_back({r, false});
    const hs::Commutant cl = hs::commutant_dim(left);
    o.add("dim {X_ij v I}' - 9", std::abs(static_cast<double>(cl.dim) - 9.0), 0.0);
    // every I v X_ij lies in the span, and the dimensions match, so the spaces agree
    double residual = 0.0;
    for (const auto& g : right) {
        CMatrix rest = g;
        for (const auto& b : cl.basis) rest -= (b.conjugate().cwiseProduct(g)).sum() * b;
        residual = std::max(residual, rest.norm());
    }
    o.add("I v X_ij outside the commutant", residual, 1e-10);
    o.add("dim joint commutant - 1", std::abs(static_cast<double>(hs::commutant_dim(both).dim) - 1.0), 0.0);
    return o;
}

Outcome ac_centralizer() {
    Outcome o;
    const auto w = modular::build_weights(0.7, 8);
    SplitMix64 rng(42);
    double wrong_diag = 0.0;
    double wrong_off = 0.0;
    for (int k = 0; k < 20; ++k) {
        CMatrix d = CMatrix::Zero(8, 8);
        for (Index i = 0; i < 8; ++i) d(i, i) = rng.unit_square();
        if (!modular::centralizer_member(w, d).member) wrong_diag += 1.0;

        CMatrix b = random_square(rng, 8);
        // the witness is the largest |[B, rho]_ij| = |B_ij| |alpha_j - alpha_i|
        Index wi = 0;
        Index wj = 0;
        double best = -1.0;
        for (Index i = 0; i < 8; ++i)
            for (Index j = 0; j < 8; ++j) {
                const double v = std::abs(b(i, j)) * std::abs(w.alpha(j) - w.alpha(i));
                if (v > best) {
                    best = v;
                    wi = i;
                    wj = j;
                }
            }
        const auto res = modular::centralizer_member(w, b);
        if (res.member || !res.witness || res.witness->first != wi || res.witness->second != wj) wrong_off += 1.0;
    }
    o.add("diagonal B rejected", wrong_diag, 0.0);
    o.add("non-diagonal B accepted or wrong witness", wrong_off, 0.0);
    const auto w4 = modular::build_weights(0.7, 4);
    double disagree = 0.0;
    for (int k = 0; k < 40; ++k) {
        CMatrix b = random_square(rng, 4);
        if (k % 2 == 0) b = CMatrix(b.diagonal().asDiagonal());
        if (modular::centralizer_member(w4, b).member != modular::centralizer_by_pairing(w4, b)) disagree += 1.0;
    }
    o.add("pairing oracle disagreements at N = 4", disagree, 0.0);
    return o;
}

Outcome ac_hermite_three_way() {
    using namespace hermite;
    Outcome o;
    double bad = 0.0;
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= 12; ++k) {
            const BivarPoly r = ch_recursion(n, k);
            if (!(r == ch_rodrigues(n, k))) bad += 1.0;
            if (!(r == ch_explicit(n, k))) bad += 1.0;
        }
    o.add("coefficient mismatches, n, k <= 12", bad, 0.0);
    const BivarPoly diff = ch_explicit(1, 1, true) - ch_rodrigues(1, 1);
    const bool exactly_two = diff.terms().size() == 1 && diff.coeff(0, 0) == QComplex(2);
    o.add("printed h_11 - h_11 != 2", exactly_two ? 0.0 : 1.0, 0.0);
    return o;
}

Outcome ac_hermite_identities() {
    using namespace hermite;
    Outcome o;
    double sym = 0.0;
    double contiguous = 0.0;
    double ladder = 0.0;
    double number = 0.0;
    double hamiltonian = 0.0;
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= 8; ++k) {
            const BivarPoly h = ch_recursion(n, k);
            if (!(h.swap_vars() == ch_recursion(k, n))) sym += 1;
            if (!(h * QComplex(k - n) == ch_recursion(n, k + 1).times_zbar() - ch_recursion(n + 1, k).times_z()))
                contiguous += 1;
            BivarPoly g = ch_recursion(0, k);
            for (int j = 0; j < n; ++j) g = ladder_apply(Ladder::A_plus_dag, g);
            if (!(g == h)) ladder += 1;
            BivarPoly f = ch_recursion(n, 0);
            for (int j = 0; j < k; ++j) f = ladder_apply(Ladder::A_minus_dag, f);
            if (!(f == h)) ladder += 1;
            if (!(number_apply(Number::N_plus, h) == h * QComplex(n))) number += 1;
            if (!(number_apply(Number::N_minus, h) == h * QComplex(k))) number += 1;
            if (!(number_apply(Number::N_minus, h) * QComplex(2) + h == h * QComplex(2 * k + 1))) hamiltonian += 1;
            if (!(number_apply(Number::N_plus, h) * QComplex(2) + h == h * QComplex(2 * n + 1))) hamiltonian += 1;
        }
    o.add("symmetry", sym, 0.0);
    o.add("contiguous relations", contiguous, 0.0);
    o.add("ladder generation", ladder, 0.0);
    o.add("N+- eigenvalues", number, 0.0);
    o.add("H_up / H_down eigenvalues", hamiltonian, 0.0);
    return o;
}

Outcome ac_quadrature() {
    Outcome o;
    const quad::ComplexGaussRule rule = quad::build_rule(40, 64);
    double moment = 0.0;
    for (int m = 0; m <= 12; ++m)
        for (int k = 0; k <= 12; ++k) {
            const Complex v = quad::integrate(rule, [m, k](Complex z) { return std::pow(std::conj(z), m) * std::pow(z, k); });
            // relative to int |z|^(m+k) dnu, the size of the integrand
            const double scale = std::max(1.0, std::tgamma(0.5 * (m + k) + 1.0));
            moment = std::max(moment, std::abs(v - quad::gaussian_moment(m, k)) / scale);
        }
    o.add("moments m, k <= 12 (relative)", moment, 1e-12);

    const int top = 12;
    const Index dim = (top + 1) * (top + 1);
    CMatrix evals(dim, static_cast<Index>(rule.size()));
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const CMatrix hv = hermite::H_values(top, rule.nodes[i]);
        for (int n = 0; n <= top; ++n)
            for (int k = 0; k <= top; ++k) evals(n * (top + 1) + k, static_cast<Index>(i)) = hv(n, k) * std::sqrt(rule.weights[i]);
    }
    const CMatrix gram = evals.conjugate() * evals.transpose();
    o.add("<H_nk, H_ml> - delta delta", (gram - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-10);
    return o;
}

Outcome ac_resolutions() {
    using namespace coherent;
    Outcome o;
    const quad::ComplexGaussRule rule = quad::build_rule(40, 64);
    o.add("a-hol at M = 10", resolution_check(ResolutionKind::a_hol, 10, rule).max_deviation, 1e-10);
    o.add("hol at M = 10", resolution_check(ResolutionKind::hol, 10, rule).max_deviation, 1e-10);
    o.add("bcs at M = 8", resolution_check(ResolutionKind::bcs, 8, quad::build_rule(20, 20)).max_deviation, 1e-10);
    return o;
}

Outcome ac_landau_ccr() {
    Outcome o;
    const landau::ModeCut cut(16);
    const auto l = landau::build_A_pm(cut);
    const landau::SparseOp id = landau::sparse_identity(cut.dim());
    const landau::SparseOp zero(cut.dim(), cut.dim());
    const std::vector<const landau::SparseOp*> ops{&l.A_plus, &l.A_plus_dag, &l.A_minus, &l.A_minus_dag};
    double worst = 0.0;
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            const bool unit = (i == 0 && j == 1) || (i == 2 && j == 3);
            worst = std::max(worst, landau::interior_deviation(cut, landau::commutator(*ops[i], *ops[j]), unit ? id : zero));
        }
    o.add("commutators on the interior", worst, 1e-12);
    const auto lit = landau::build_A_pm(cut, landau::LadderForm::literal);
    o.add("printed A+: [A+, A-*] + 1/8",
          landau::interior_deviation(cut, landau::commutator(lit.A_plus, lit.A_minus_dag), -0.125 * id), 1e-12);
    return o;
}

Outcome ac_landau_spectrum() {
    Outcome o;
    const landau::ModeCut cut(16);
    const auto h = landau::hamiltonians(cut);
    const landau::LandauBasis basis(cut, 6);
    double up = 0.0;
    double down = 0.0;
    for (Index n = 0; n <= 6; ++n)
        for (Index l = 0; n + l <= 6; ++l) {
            const CVector p = basis.psi({n, l});
            up = std::max(up, landau::interior_norm(cut, h.H_up * p - (static_cast<double>(l) + 0.5) * p));
            down = std::max(down, landau::interior_norm(cut, h.H_down * p - (static_cast<double>(n) + 0.5) * p));
        }
    o.add("H_up Psi_nl - (l + 1/2) Psi_nl", up, 1e-9);
    o.add("H_down Psi_nl - (n + 1/2) Psi_nl", down, 1e-9);
    return o;
}

Outcome ac_wigner() {
    Outcome o;
    const Index nc = 64;
    const double inv_root = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const double x = -2.0 + i;
            const double y = -2.0 + j;
            const Complex z = Complex(x, -y) / std::sqrt(2.0);
            const double gauss = std::exp(-0.5 * std::norm(z));
            for (int n = 0; n <= 3; ++n)
                for (int l = 0; l <= 3; ++l) {
                    const Complex w = landau::wigner_sample(hs::matrix_unit(nc, n, l), x, y);
                    const Complex expected = gauss * hermite::H_basis(n, l).eval(z) * inv_root;
                    worst = std::max(worst, std::abs(w - expected));
                }
        }
    o.add("|W X_nl - e^(-|z|^2/2) H_nl(zbar, z)/sqrt(2 pi)|, n, l <= 3", worst, 1e-6);
    return o;
}

Outcome ac_modular_coherent() {
    using namespace coherent;
    Outcome o;
    const double beta = 0.7;
    const int m = 10;
    const CMatrix delta = delta_diagonal(beta, m);
    const auto w = modular::build_weights(beta, m + 1);
    double closed = 0.0;
    double core = 0.0;
    for (int n = 0; n <= m; ++n)
        for (int l = 0; l <= m; ++l) {
            const Complex d = delta(n * (m + 1) + l, n * (m + 1) + l);
            closed = std::max(closed, std::abs(d - std::exp(-beta * (n - l))));
            core = std::max(core, std::abs(d - w.alpha(n) / w.alpha(l)));
        }
    o.add("Delta H_nl - e^(-beta (n - l)) H_nl", closed, 1e-12);
    o.add("Delta H_nl - (alpha_n / alpha_l) H_nl", core, 1e-12);
    const Index d = (m + 1) * (m + 1);
    CMatrix up = CMatrix::Zero(d, d);
    CMatrix down = CMatrix::Zero(d, d);
    for (int n = 0; n <= m; ++n)
        for (int l = 0; l <= m; ++l) {
            up(n * (m + 1) + l, n * (m + 1) + l) = l + 0.5;
            down(n * (m + 1) + l, n * (m + 1) + l) = n + 0.5;
        }
    const TruncatedMap j = J_map(m);
    o.add("J H_up - H_down J", distance(compose(j, TruncatedMap{m, up, false}), compose(TruncatedMap{m, down, false}, j)), 0.0);
    const KmsVector x = kms_vector(beta, m);
    o.add("J X - X", (J_swap(x.coeffs).c - x.coeffs.c).norm(), 1e-13);
    return o;
}

Outcome ac_determinism() {
    Outcome o;
    verify::SuiteConfig cfg;
    cfg.seed = 42;
    const std::string first = verify::dump(verify::run_suite("all", cfg));
    const std::string second = verify::dump(verify::run_suite("all", cfg));
    cfg.threads = 3;
    const std::string threaded = verify::dump(verify::run_suite("all", cfg));
    o.add("two runs differ", first == second ? 0.0 : 1.0, 0.0);
    o.add("threads 1 vs 3 differ", first == threaded ? 0.0 : 1.0, 0.0);
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "modular triple, N = 16, beta = 0.7", ac_modular_triple},
        {2, "KMS boundary condition", ac_kms},
        {3, "commutant brute force, N = 3", ac_commutant},
        {4, "centralizer, N = 8", ac_centralizer},
        {5, "complex Hermite three-way equality", ac_hermite_three_way},
        {6, "complex Hermite identities, indices <= 8", ac_hermite_identities},
        {7, "quadrature exactness, R = 40, K = 64", ac_quadrature},
        {8, "resolutions of the identity", ac_resolutions},
        {9, "Landau CCR suite, Ncut = 16", ac_landau_ccr},
        {10, "Landau spectrum and degeneracy, Ncut = 16", ac_landau_spectrum},
        {11, "Wigner cross-check, Ncut = 64", ac_wigner},
        {12, "modular / coherent consistency", ac_modular_coherent},
        {13, "determinism of verify all --seed 42", ac_determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        std::string error;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = error.empty() && secs < 60.0;
        for (const auto& p : o.parts) ok = ok && p.ok();
        if (!ok) ++failed;
        std::printf("AC%02d %s  %s (%.1fs)\n", c.id, ok ? "PASS" : "FAIL", c.title, secs);
        if (!error.empty()) std::printf("       error: %s\n", error.c_str());
        for (const auto& p : o.parts)
            std::printf("       %-4s %s: %.3g (bound %.3g)\n", p.ok() ? "ok" : "FAIL", p.what.c_str(), p.error, p.bound);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
