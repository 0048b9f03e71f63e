// suites.cpp: verification suites behind `modkit verify`

#include "mtk/suites.hpp"

#include "mtk/coherent.hpp"
#include "mtk/complex_hermite.hpp"
#include "mtk/hs_space.hpp"
#include "mtk/landau.hpp"
#include "mtk/modular.hpp"
#include "mtk/parallel.hpp"
#include "mtk/quadrature.hpp"
#include "mtk/random.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

namespace mtk::verify {

namespace {

using linalg::scaled_bound;

// Each suite draws from its own stream so `all` reproduces the single suites.
SplitMix64 suite_rng(const SuiteConfig& cfg, std::uint64_t salt) {
    return SplitMix64(cfg.seed ^ (0x9e3779b97f4a7c15ULL * salt));
}

double max_of(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, x);
    return m;
}

const std::vector<double>& kms_times() {
    static const std::vector<double> t{-2.0, -1.0, 0.0, 1.0, 2.0};
    return t;
}

double projection_residual(const hs::Commutant& c, const CMatrix& g) {
    CMatrix rest = g;
    for (const auto& b : c.basis) rest -= (b.conjugate().cwiseProduct(g)).sum() * b;
    return rest.norm();
}

// ---------------------------------------------------------------- modular

Report modular_suite(const SuiteConfig& cfg) {
    Report r{"modular", cfg, {}, {}, {}};
    SplitMix64 rng = suite_rng(cfg, 1);
    const Index n = cfg.dim;
    const auto w = modular::build_weights(cfg.beta, n);
    const auto m = modular::build_modular_triple(w);

    const hs::SuperOp s_polar = modular::polar_S(m);
    r.add("modular.polar_S", "S = J Delta^(1/2)", hs::superop_distance(m.S, s_polar),
          scaled_bound(1e-12, m.S.matrix.norm()));
    const hs::SuperOp s_star_s = hs::superop_compose(hs::superop_adjoint(m.S), m.S);
    r.add("modular.polar_Delta", "Delta = S* S", hs::superop_distance(m.Delta, s_star_s),
          scaled_bound(1e-12, m.Delta.matrix.norm()));
    r.add("modular.J_involution", "J^2 = I", hs::superop_distance(hs::superop_compose(m.J, m.J), hs::identity_superop(n)),
          1e-12);

    const hs::HSVector phi = modular::cyclic_vector(w);
    r.add("modular.Phi_norm", "<Phi, Phi> = 1", std::abs(hs::hs_inner(phi, phi) - 1.0), 1e-13);
    r.add("modular.J_Phi", "J Phi = Phi", (hs::superop_apply(m.J, phi).data - phi.data).norm(), 1e-13);
    r.add("modular.Delta_Phi", "Delta Phi = Phi", (hs::superop_apply(m.Delta, phi).data - phi.data).norm(), 1e-13);
    r.add("modular.weights_sum", "sum alpha_i = 1", std::abs(w.alpha.sum() - 1.0), 1e-14);

    double ratio_err = 0.0;
    for (Index i = 0; i + 1 < n; ++i) ratio_err = std::max(ratio_err, std::abs(w.alpha(i + 1) / w.alpha(i) - std::exp(-cfg.beta)));
    r.add("modular.weights_geometric", "alpha_(n+1) / alpha_n = exp(-beta)", ratio_err, 1e-12);

    r.add("modular.Delta_hamiltonian", "Delta = exp(-beta H_phi)",
          hs::superop_distance(m.Delta, modular::delta_from_hamiltonian(w, m)), scaled_bound(1e-12, m.Delta.matrix.norm()));

    double h_err = 0.0;
    double h_scale = 1.0;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            const double expected = -(w.log_alpha(i) - w.log_alpha(j)) / cfg.beta;
            h_err = std::max(h_err, std::abs(m.bigH.matrix(i * n + j, i * n + j).real() - expected));
            h_scale = std::max(h_scale, std::abs(expected));
        }
    r.add("modular.H_eigenvalues", "H_phi X_ij = -(1/beta) log(alpha_i / alpha_j) X_ij", h_err,
          scaled_bound(1e-12, h_scale));

    std::vector<CMatrix> samples;
    for (int k = 0; k < 20; ++k) samples.push_back(random_square(rng, n));
    const auto s_action = parallel_map(samples.size(), cfg.threads, [&](std::size_t k) {
        const CMatrix& a = samples[k];
        const hs::HSVector a_phi(a * phi.data);
        const hs::HSVector adj_phi(a.adjoint() * phi.data);
        return (hs::superop_apply(m.S, a_phi).data - adj_phi.data).norm() / std::max(1.0, a.norm());
    });
    r.add("modular.S_action", "S (A Phi) = A* Phi", max_of(s_action), 1e-11);

    const auto flows = parallel_map(samples.size(), cfg.threads, [&](std::size_t k) {
        const CMatrix& a = samples[k];
        double conv = 0.0;
        double inv = 0.0;
        for (double t : kms_times()) {
            const CMatrix f = modular::modular_flow(w, t, a);
            conv = std::max(conv, (f - modular::modular_flow_delta(w, m, t, a)).norm() / std::max(1.0, a.norm()));
            inv = std::max(inv, std::abs(modular::state_eval(w, f) - modular::state_eval(w, a)) / std::max(1.0, a.norm()));
        }
        return std::make_pair(conv, inv);
    });
    double conv = 0.0;
    double inv = 0.0;
    for (const auto& [c, i] : flows) {
        conv = std::max(conv, c);
        inv = std::max(inv, i);
    }
    r.add("modular.flow_conventions", "Delta^(-it/beta) = exp(i H_phi t)", conv, 1e-10);
    r.add("modular.state_invariance", "phi(sigma_t(A)) = phi(A)", inv, 1e-12);

    {
        const CMatrix& a = samples[0];
        const double t = 0.9;
        const auto eig = linalg::hermitian_eig(m.bigH.matrix);
        const CMatrix flow = linalg::func_calculus(eig, [t](double x) { return std::exp(kI * x * t); });
        const CMatrix lhs = flow * hs::sandwich_superop(hs::left_op(a)).matrix * flow.adjoint();
        const CMatrix rhs = hs::sandwich_superop(hs::left_op(modular::modular_flow(w, t, a))).matrix;
        r.add("modular.flow_left_algebra", "e^(iHt) (A v I) e^(-iHt) = sigma_t(A) v I",
              linalg::frobenius_distance(lhs, rhs), scaled_bound(1e-12, rhs.norm()));
    }

    double anti = 0.0;
    double mutual = 0.0;
    double swap = 0.0;
    for (int k = 0; k < 5; ++k) {
        const hs::HSVector x(random_square(rng, n));
        const hs::HSVector y(random_square(rng, n));
        const Complex lhs = hs::hs_inner(hs::superop_apply(m.J, x), hs::superop_apply(m.J, y));
        anti = std::max(anti, std::abs(lhs - hs::hs_inner(y, x)) / (x.data.norm() * y.data.norm()));
        const CMatrix& a = samples[static_cast<std::size_t>(k)];
        const CMatrix& b = samples[static_cast<std::size_t>(k + 5)];
        const CMatrix la = hs::sandwich_superop(hs::left_op(a)).matrix;
        const CMatrix rb = hs::sandwich_superop(hs::right_op(b)).matrix;
        mutual = std::max(mutual, linalg::commutator(la, rb).norm() / (la.norm() * rb.norm()));
        const hs::SuperOp conj = hs::superop_compose(m.J, hs::superop_compose({la, false}, m.J));
        swap = std::max(swap, hs::superop_distance(conj, hs::sandwich_superop(hs::right_op(a))) / la.norm());
    }
    r.add("modular.J_antiunitary", "<J x, J y> = <y, x>", anti, 1e-12);
    r.add("modular.algebras_commute", "[A v I, I v B] = 0", mutual, 1e-12);
    r.add("modular.J_swaps_algebras", "J (A v I) J = I v A", swap, 1e-12);

    {
        const Index d = 3;
        std::vector<hs::SuperOp> left;
        std::vector<hs::SuperOp> both;
        std::vector<CMatrix> right;
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j) {
                const CMatrix x = hs::matrix_unit(d, i, j).data;
                left.push_back(hs::sandwich_superop(hs::left_op(x)));
                right.push_back(hs::sandwich_superop(hs::right_op(x)).matrix);
            }
        both = left;
        for (const auto& g : right) both.push_back({g, false});
        const hs::Commutant cl = hs::commutant_dim(left);
        const hs::Commutant cb = hs::commutant_dim(both);
        double span = 0.0;
        for (const auto& g : right) span = std::max(span, projection_residual(cl, g));
        r.add("modular.commutant_left_dim", "dim {X_ij v I}' = 9", std::abs(static_cast<double>(cl.dim - 9)), 0.0);
        r.add("modular.commutant_left_span", "{X_ij v I}' = span{I v X_ij}", span, 1e-10);
        r.add("modular.factor_center", "A_l' intersect A_r' = C", std::abs(static_cast<double>(cb.dim - 1)), 0.0);
    }

    {
        const auto w8 = modular::build_weights(cfg.beta, 8);
        double wrong = 0.0;
        for (int k = 0; k < 20; ++k) {
            CMatrix diag = CMatrix::Zero(8, 8);
            for (Index i = 0; i < 8; ++i) diag(i, i) = rng.unit_square();
            if (!modular::centralizer_member(w8, diag).member) wrong += 1.0;
            const CMatrix b = random_square(rng, 8);
            Index wi = 0;
            Index wj = 0;
            double best = -1.0;
            for (Index i = 0; i < 8; ++i)
                for (Index j = 0; j < 8; ++j) {
                    const double v = std::abs(b(i, j)) * std::abs(w8.alpha(i) - w8.alpha(j));
                    if (v > best) {
                        best = v;
                        wi = i;
                        wj = j;
                    }
                }
            const auto res = modular::centralizer_member(w8, b);
            if (res.member || !res.witness || res.witness->first != wi || res.witness->second != wj) wrong += 1.0;
        }
        r.add("modular.centralizer_predicate", "[B, rho] = 0 iff B diagonal", wrong, 0.0);

        const auto w4 = modular::build_weights(cfg.beta, 4);
        double disagree = 0.0;
        for (int k = 0; k < 20; ++k) {
            CMatrix b = random_square(rng, 4);
            if (k % 2 == 0) b = CMatrix(b.diagonal().asDiagonal());
            if (modular::centralizer_member(w4, b).member != modular::centralizer_by_pairing(w4, b)) disagree += 1.0;
        }
        r.add("modular.centralizer_pairing", "phi([B, X_kl]) = 0 for all k, l", disagree, 0.0);
    }
    return r;
}

// ---------------------------------------------------------------- kms

Report kms_suite(const SuiteConfig& cfg) {
    Report r{"kms", cfg, {}, {}, {}};
    SplitMix64 rng = suite_rng(cfg, 2);
    const Index n = cfg.dim;
    const auto w = modular::build_weights(cfg.beta, n);

    std::vector<std::pair<CMatrix, CMatrix>> pairs;
    for (int k = 0; k < 20; ++k) {
        CMatrix a = random_square(rng, n);
        CMatrix b = random_square(rng, n);
        pairs.emplace_back(std::move(a), std::move(b));
    }
    const auto boundary = parallel_map(pairs.size(), cfg.threads, [&](std::size_t k) {
        return modular::kms_boundary_check(w, pairs[k].first, pairs[k].second, kms_times());
    });
    r.add("kms.boundary_random", "F(t + i beta) = phi(sigma_t(B) A)", max_of(boundary), 1e-10);

    const auto real_axis = parallel_map(pairs.size(), cfg.threads, [&](std::size_t k) {
        const auto& [a, b] = pairs[k];
        double worst = 0.0;
        for (double t : kms_times()) {
            const Complex f = modular::kms_F(w, a, b, Complex(t, 0.0));
            const Complex direct = modular::state_eval(w, a * modular::modular_flow(w, t, b));
            worst = std::max(worst, std::abs(f - direct));
        }
        return worst;
    });
    r.add("kms.real_axis", "F(t) = phi(A sigma_t(B))", max_of(real_axis), 1e-12);

    const CMatrix x01 = hs::matrix_unit(n, 0, 1).data;
    const CMatrix x10 = hs::matrix_unit(n, 1, 0).data;
    double closed = 0.0;
    for (double t : kms_times()) {
        const Complex phase = std::exp(kI * t);
        closed = std::max(closed, std::abs(modular::kms_F(w, x01, x10, Complex(t, 0.0)) - w.alpha(0) * phase));
        closed = std::max(closed, std::abs(modular::kms_F(w, x01, x10, Complex(t, cfg.beta)) - w.alpha(1) * phase));
    }
    r.add("kms.closed_form", "F(t) = alpha_0 e^(it), F(t + i beta) = alpha_1 e^(it)", closed, 1e-13);

    const CMatrix id = CMatrix::Identity(n, n);
    double unit = 0.0;
    for (double t : kms_times()) unit = std::max(unit, std::abs(modular::kms_F(w, id, id, Complex(t, 0.5 * cfg.beta)) - 1.0));
    r.add("kms.identity_pair", "F_(I,I) = 1", unit, 1e-13);

    const CMatrix x01_flow = modular::modular_flow(w, 1.3, x01);
    r.add("kms.flow_phase", "sigma_t(X_01) = e^(-it) X_01", (x01_flow - std::exp(-kI * 1.3) * x01).norm(), 1e-13);
    return r;
}

// ---------------------------------------------------------------- errata

Erratum a_plus_erratum() {
    const landau::ModeCut cut(16);
    const auto lit = landau::build_A_pm(cut, landau::LadderForm::literal);
    const landau::SparseOp comm = landau::commutator(lit.A_plus, lit.A_minus_dag);
    return {"A_plus_sign",
            "A+ = 3/4 (a_x - i a_y) - 1/4 (a_x* + i a_y*)",
            "A+ = 3/4 (a_x - i a_y) - 1/4 (a_x* - i a_y*), from A+ = (Q+ + i P+)/sqrt2",
            "[A+, A-*] on the interior for the printed form (vanishes for the derived form)",
            comm.coeff(0, 0).real()};
}

Erratum modular_hamiltonian_erratum() {
    const hermite::BivarPoly h = hermite::ch_recursion(2, 1);
    const hermite::BivarPoly up = hermite::number_apply(hermite::Number::N_minus, h);
    const hermite::BivarPoly down = hermite::number_apply(hermite::Number::N_plus, h);
    const hermite::BivarPoly diff = up - down;
    const double eig = (diff.coeff(2, 1).re / h.coeff(2, 1).re).convert_to<double>();
    return {"modular_hamiltonian",
            "H_phi = H_up - H_down = -2 (N+ - N-)",
            "H_phi = N+ - N-, so Delta = exp(-beta H_phi) has eigenvalue exp(-beta (n - l)) on H_nl",
            "eigenvalue of H_up - H_down on H_21 (Delta requires 1)",
            eig};
}

Erratum number_label_erratum() {
    const hermite::BivarPoly h10 = hermite::ch_recursion(1, 0);
    const hermite::BivarPoly img = hermite::number_apply(hermite::Number::N_plus, h10);
    return {"number_operator_labels",
            "N+ H_nl = l H_nl, N- H_nl = n H_nl",
            "N+ H_nl = n H_nl, N- H_nl = l H_nl",
            "eigenvalue of N+ on H_10 = zbar (printed form gives 0)",
            (img.coeff(1, 0).re).convert_to<double>()};
}

Erratum explicit_sum_erratum() {
    const hermite::BivarPoly diff = hermite::ch_explicit(1, 1, true) - hermite::ch_rodrigues(1, 1);
    return {"explicit_sum_sign",
            "h_nk = n! k! sum_j zbar^(n-j) z^(k-j) / ((n-j)! (k-j)!)",
            "h_nk = n! k! sum_j (-1)^j zbar^(n-j) z^(k-j) / ((n-j)! (k-j)! j!)",
            "printed h_11 minus Rodrigues h_11",
            diff.coeff(0, 0).re.convert_to<double>()};
}

// ---------------------------------------------------------------- landau

Report landau_suite(const SuiteConfig& cfg) {
    Report r{"landau", cfg, {}, {}, {}};
    if (cfg.ncut < 12) throw ConfigError("landau suite needs --ncut >= 12 (interior must hold levels up to 6)");
    const landau::ModeCut cut(cfg.ncut);
    const auto l = landau::build_A_pm(cut);
    const landau::SparseOp id = landau::sparse_identity(cut.dim());
    const landau::SparseOp zero(cut.dim(), cut.dim());

    struct Named {
        const char* name;
        const landau::SparseOp* op;
    };
    const std::vector<Named> ops{{"A+", &l.A_plus}, {"A+*", &l.A_plus_dag}, {"A-", &l.A_minus}, {"A-*", &l.A_minus_dag}};
    double ccr = 0.0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i; j < ops.size(); ++j) {
            const landau::SparseOp c = landau::commutator(*ops[i].op, *ops[j].op);
            const landau::SparseOp* expected = &zero;
            if (i == 0 && j == 1) expected = &id;
            if (i == 2 && j == 3) expected = &id;
            ccr = std::max(ccr, landau::interior_deviation(cut, c, *expected));
        }
    }
    r.add("landau.ccr", "[A+-, A+-*] = 1, all other commutators 0", ccr, 1e-12);

    const auto qp = landau::build_A_pm_from_qp(cut);
    double route = 0.0;
    route = std::max(route, landau::SparseOp(l.A_plus - qp.A_plus).coeffs().cwiseAbs().maxCoeff());
    route = std::max(route, landau::SparseOp(l.A_minus - qp.A_minus).coeffs().cwiseAbs().maxCoeff());
    r.add("landau.qp_route", "A+ = (Q+ + i P+)/sqrt2, A- = (i Q- - P-)/sqrt2", route, 1e-12);

    const Erratum lit = a_plus_erratum();
    {
        const landau::ModeCut small(16);
        const auto litl = landau::build_A_pm(small, landau::LadderForm::literal);
        const landau::SparseOp c = landau::commutator(litl.A_plus, litl.A_minus_dag);
        const landau::SparseOp expected = -0.125 * landau::sparse_identity(small.dim());
        r.add("landau.literal_A_plus_witness", "printed A+ gives [A+, A-*] = -1/8",
              landau::interior_deviation(small, c, expected), 1e-12);
    }

    const auto h = landau::hamiltonians(cut);
    r.add("landau.H_up_split", "H_up = H_0 + H_int_up", landau::interior_deviation(cut, h.H_up, h.H_0 + h.H_int_up), 1e-12);
    r.add("landau.H_int_sign", "H_int_down = -H_int_up", landau::interior_deviation(cut, h.H_int_down, -h.H_int_up), 1e-12);
    r.add("landau.H_commute", "[H_up, H_down] = 0", landau::interior_deviation(cut, landau::commutator(h.H_up, h.H_down), zero),
          1e-12);
    r.add("landau.intertwiner", "J H_up = H_down J", landau::interior_deviation(cut, landau::intertwine(h.H_up), h.H_down),
          1e-12);

    const Index level = 6;
    const landau::LandauBasis basis(cut, level);
    r.add("landau.vacuum", "A+ Psi_00 = A- Psi_00 = 0", basis.vacuum_residual(), 1e-12);
    std::vector<landau::FockLabel> labels;
    for (Index n = 0; n <= level; ++n)
        for (Index ll = 0; n + ll <= level; ++ll) labels.push_back({n, ll});
    const auto spectral = parallel_map(labels.size(), cfg.threads, [&](std::size_t k) {
        const auto& lab = labels[k];
        const CVector p = basis.psi(lab);
        const double up = landau::interior_norm(cut, h.H_up * p - (static_cast<double>(lab.l) + 0.5) * p);
        const double down = landau::interior_norm(cut, h.H_down * p - (static_cast<double>(lab.n) + 0.5) * p);
        const double swap = (landau::intertwiner(p) - basis.psi({lab.l, lab.n})).norm();
        return std::array<double, 3>{up, down, swap};
    });
    double up = 0.0;
    double down = 0.0;
    double swap = 0.0;
    for (const auto& s : spectral) {
        up = std::max(up, s[0]);
        down = std::max(down, s[1]);
        swap = std::max(swap, s[2]);
    }
    r.add("landau.H_up_spectrum", "H_up Psi_nl = (l + 1/2) Psi_nl", up, 1e-9);
    r.add("landau.H_down_spectrum", "H_down Psi_nl = (n + 1/2) Psi_nl", down, 1e-9);
    r.add("landau.intertwiner_states", "J Psi_nl = Psi_ln", swap, 1e-9);

    double ortho = 0.0;
    double projected = 0.0;
    for (const auto& a : labels) {
        if (a.n + a.l > 4) continue;
        const CMatrix ga = basis.psi_working(a);
        const CVector pa = basis.psi(a);
        const double ta = basis.tail_norm(a);
        for (const auto& b : labels) {
            if (b.n + b.l > 4) continue;
            const double delta = (a.n == b.n && a.l == b.l) ? 1.0 : 0.0;
            const Complex ip = (ga.conjugate().cwiseProduct(basis.psi_working(b))).sum();
            ortho = std::max(ortho, std::abs(ip - delta));
            // Projected states are renormalized; the defect is bounded by the tails.
            const double tb = basis.tail_norm(b);
            const double bound = ta * tb / std::sqrt((1.0 - ta * ta) * (1.0 - tb * tb));
            const double dev = std::abs(pa.dot(basis.psi(b)) - delta);
            projected = std::max(projected, std::max(0.0, dev - bound));
        }
    }
    r.add("landau.orthonormal", "<Psi_nl, Psi_n'l'> = delta delta", ortho, 1e-9);
    r.add("landau.orthonormal_projected", "|<P Psi_a, P Psi_b> - delta| <= tail bound", projected, 1e-12);

    {
        const quad::GaussRule gh = quad::gauss_hermite(60);
        double worst = 0.0;
        for (int a = 0; a <= 8; ++a)
            for (int b = 0; b <= 8; ++b) {
                double sum = 0.0;
                for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
                    const double x = gh.nodes[i];
                    sum += gh.weights[i] * std::exp(x * x) * landau::hermite_fn(a, x) * landau::hermite_fn(b, x);
                }
                worst = std::max(worst, std::abs(sum - (a == b ? 1.0 : 0.0)));
            }
        r.add("landau.hermite_functions", "int zeta_m zeta_n dx = delta_mn", worst, 1e-10);
    }

    r.add_erratum(lit);
    for (auto& e : core_errata()) r.add_erratum(e);
    return r;
}

// ---------------------------------------------------------------- hermite

Report hermite_suite(const SuiteConfig& cfg) {
    Report r{"hermite", cfg, {}, {}, {}};
    using namespace hermite;

    std::vector<std::pair<int, int>> grid12;
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= 12; ++k) grid12.emplace_back(n, k);
    const auto three_way = parallel_map(grid12.size(), cfg.threads, [&](std::size_t i) {
        const auto [n, k] = grid12[i];
        const BivarPoly rec = ch_recursion(n, k, RecursionOrder::k_first);
        int bad = 0;
        if (!(rec == ch_recursion(n, k, RecursionOrder::n_first))) ++bad;
        if (!(rec == ch_rodrigues(n, k))) ++bad;
        if (!(rec == ch_explicit(n, k))) ++bad;
        return static_cast<double>(bad);
    });
    double mismatches = 0.0;
    for (double x : three_way) mismatches += x;
    r.add("hermite.three_way", "recursion = Rodrigues = explicit sum, n, k <= 12", mismatches, 0.0);

    const BivarPoly lit_diff = ch_explicit(1, 1, true) - ch_rodrigues(1, 1);
    const double lit_err = lit_diff.terms().size() == 1 && lit_diff.coeff(0, 0) == QComplex(2) ? 0.0 : 1.0;
    r.add("hermite.literal_sum_witness", "printed explicit h_11 - h_11 = 2", lit_err, 0.0);

    std::vector<std::pair<int, int>> grid8;
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= 8; ++k) grid8.emplace_back(n, k);
    const auto identities = parallel_map(grid8.size(), cfg.threads, [&](std::size_t i) {
        const auto [n, k] = grid8[i];
        std::array<double, 6> bad{};
        const BivarPoly h = ch_recursion(n, k);
        if (!(h.swap_vars() == ch_recursion(k, n))) bad[0] += 1;
        // (k - n) h_nk = zbar h_{n,k+1} - z h_{n+1,k}
        if (!(h * QComplex(k - n) == ch_recursion(n, k + 1).times_zbar() - ch_recursion(n + 1, k).times_z())) bad[1] += 1;
        if (n == k && !(ch_recursion(n, n + 1).times_zbar() == ch_recursion(n + 1, n).times_z())) bad[1] += 1;
        BivarPoly g = ch_recursion(0, k);
        for (int j = 0; j < n; ++j) g = ladder_apply(Ladder::A_plus_dag, g);
        if (!(g == h)) bad[2] += 1;
        if (!(number_apply(Number::N_plus, h) == h * QComplex(n))) bad[3] += 1;
        if (!(number_apply(Number::N_minus, h) == h * QComplex(k))) bad[3] += 1;
        // H_up = N- + 1/2, H_down = N+ + 1/2, checked on 2 h to stay integral
        const BivarPoly two_up = number_apply(Number::N_minus, h) * QComplex(2) + h;
        const BivarPoly two_down = number_apply(Number::N_plus, h) * QComplex(2) + h;
        if (!(two_up == h * QComplex(2 * k + 1))) bad[4] += 1;
        if (!(two_down == h * QComplex(2 * n + 1))) bad[4] += 1;
        BivarPoly lowered = ladder_apply(Ladder::A_plus, h);
        if (!(lowered == (n > 0 ? ch_recursion(n - 1, k) * QComplex(n) : BivarPoly()))) bad[5] += 1;
        lowered = ladder_apply(Ladder::A_minus, h);
        if (!(lowered == (k > 0 ? ch_recursion(n, k - 1) * QComplex(k) : BivarPoly()))) bad[5] += 1;
        return bad;
    });
    std::array<double, 6> totals{};
    for (const auto& b : identities)
        for (std::size_t j = 0; j < totals.size(); ++j) totals[j] += b[j];
    r.add("hermite.symmetry", "h_nk(zbar, z) = h_kn(z, zbar)", totals[0], 0.0);
    r.add("hermite.contiguous", "(k - m) h_mk = zbar h_(m,k+1) - z h_(m+1,k)", totals[1], 0.0);
    r.add("hermite.ladder_generation", "h_nk = (A+*)^n h_0k", totals[2], 0.0);
    r.add("hermite.number_eigenvalues", "N+ H_nl = n H_nl, N- H_nl = l H_nl", totals[3], 0.0);
    r.add("hermite.hamiltonian_eigenvalues", "H_up H_nl = (l + 1/2) H_nl, H_down H_nl = (n + 1/2) H_nl", totals[4], 0.0);
    r.add("hermite.lowering", "A+ h_nk = n h_(n-1,k), A- h_nk = k h_(n,k-1)", totals[5], 0.0);

    double ccr = 0.0;
    {
        SplitMix64 rng = suite_rng(cfg, 4);
        for (int trial = 0; trial < 10; ++trial) {
            BivarPoly p;
            for (int m = 0; m <= 4; ++m)
                for (int k = 0; k <= 4; ++k) {
                    const auto re = static_cast<long long>(rng.next() % 21) - 10;
                    const auto im = static_cast<long long>(rng.next() % 21) - 10;
                    p.add_term(m, k, QComplex(Rational(re), Rational(im)));
                }
            const BivarPoly c = ladder_apply(Ladder::A_minus, ladder_apply(Ladder::A_minus_dag, p)) -
                                ladder_apply(Ladder::A_minus_dag, ladder_apply(Ladder::A_minus, p));
            const BivarPoly c2 = ladder_apply(Ladder::A_plus, ladder_apply(Ladder::A_plus_dag, p)) -
                                 ladder_apply(Ladder::A_plus_dag, ladder_apply(Ladder::A_plus, p));
            if (!(c == p)) ccr += 1;
            if (!(c2 == p)) ccr += 1;
        }
    }
    r.add("hermite.ladder_ccr", "[A+-, A+-*] p = p", ccr, 0.0);

    const GeneratingCheck gen = ch_generating_check(QComplex(Rational(1, 2), Rational(1, 3)),
                                                    QComplex(Rational(-1, 4), Rational(1, 2)), 8);
    r.add("hermite.generating_coefficients", "[v^n u^k] exp(u z + v zbar - u v) = h_nk / (n! k!)",
          static_cast<double>(gen.mismatches), 0.0);
    r.add("hermite.generating_pointwise", "truncated generating sum within its remainder bound",
          std::max(0.0, gen.pointwise_residual - gen.truncation_bound), 1e-13);

    double real_bad = 0.0;
    for (int n = 0; n <= 8; ++n) {
        UniPoly xn(static_cast<std::size_t>(n) + 1, Rational(0));
        xn[static_cast<std::size_t>(n)] = 1;
        if (!uni_equal(restrict_diagonal(ch_recursion(n, 0)), xn)) real_bad += 1;
        if (!uni_equal(restrict_diagonal(ch_recursion(0, n)), xn)) real_bad += 1;
        // x h_n = n h_(n-1) + 1/2 h_(n+1)
        UniPoly rhs = uni_scale(real_hermite(n + 1), Rational(1, 2));
        if (n > 0) rhs = uni_add(rhs, uni_scale(real_hermite(n - 1), Rational(n)));
        if (!uni_equal(uni_times_x(real_hermite(n)), rhs)) real_bad += 1;
    }
    r.add("hermite.real_reduction", "x h_n = n h_(n-1) + h_(n+1)/2; h_n0(x, x) = x^n", real_bad, 0.0);

    const double eval_err = std::max(std::abs(eval(ch_recursion(1, 1), Complex(1.0, 0.0))),
                                     std::abs(H_basis(1, 1).eval(Complex(1.0, 1.0)) - 1.0));
    r.add("hermite.eval", "h_11(1) = 0, H_11(1 + i) = 1", eval_err, 1e-15);

    for (auto& e : core_errata()) r.add_erratum(e);
    return r;
}

// ---------------------------------------------------------------- quadrature

Report quadrature_suite(const SuiteConfig& cfg) {
    Report r{"quadrature", cfg, {}, {}, {}};
    const quad::ComplexGaussRule rule = quad::build_rule(cfg.radial, cfg.angular);
    const int order = 12;
    if (!rule.certifies_block(2 * order, 2 * order)) {
        throw ConfigError("quadrature suite: rule (R = " + std::to_string(cfg.radial) + ", K = " +
                          std::to_string(cfg.angular) + ") does not certify zbar^m z^k for m, k <= 24; need 2R - 1 >= 24 and K > 24");
    }
    double wsum = 0.0;
    double wmin = 1.0;
    for (double x : rule.weights) {
        wsum += x;
        wmin = std::min(wmin, x);
    }
    r.add("quadrature.weights_sum", "int dnu = 1", std::abs(wsum - 1.0), 1e-13);
    r.add("quadrature.weights_positive", "w_i > 0", wmin > 0.0 ? 0.0 : 1.0, 0.0);

    double moment = 0.0;
    for (int m = 0; m <= order; ++m)
        for (int k = 0; k <= order; ++k) {
            const Complex v = quad::integrate(rule, [m, k](Complex z) { return std::pow(std::conj(z), m) * std::pow(z, k); });
            const double scale = std::max(1.0, std::tgamma(0.5 * (m + k) + 1.0));
            moment = std::max(moment, std::abs(v - quad::gaussian_moment(m, k)) / scale);
        }
    r.add("quadrature.moments", "int zbar^m z^k dnu = delta_mk m!", moment, 1e-12);

    const int dim = (order + 1) * (order + 1);
    std::vector<CMatrix> values(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) values[i] = hermite::H_values(order, rule.nodes[i]);
    CMatrix evals(dim, static_cast<Index>(rule.size()));
    for (std::size_t i = 0; i < rule.size(); ++i)
        for (int n = 0; n <= order; ++n)
            for (int k = 0; k <= order; ++k)
                evals(n * (order + 1) + k, static_cast<Index>(i)) = values[i](n, k) * std::sqrt(rule.weights[i]);
    const CMatrix gram = evals.conjugate() * evals.transpose();
    r.add("quadrature.H_orthonormal", "<H_nk, H_ml> = delta delta",
          (gram - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-10);

    std::vector<double> errors;
    const Complex w0(0.8, -0.5);
    const double exact = std::exp(std::norm(w0));
    for (int rr : {2, 4, 8, 16}) {
        const auto small = quad::build_rule(rr, 2 * rr);
        const Complex v = quad::integrate(small, [w0](Complex z) {
            return std::exp(std::conj(w0) * z + std::conj(z) * w0);
        });
        errors.push_back(std::abs(v - exact));
    }
    double violations = 0.0;
    for (std::size_t i = 1; i < errors.size(); ++i)
        if (errors[i] > errors[i - 1] && errors[i] > 1e-14) violations += 1;
    r.add("quadrature.convergence", "kernel integral error decreases with R, K", violations, 0.0);

    const quad::GaussRule gh = quad::gauss_hermite(60);
    double gh_err = 0.0;
    for (int p = 0; p <= 20; ++p) {
        double sum = 0.0;
        for (std::size_t i = 0; i < gh.nodes.size(); ++i) sum += gh.weights[i] * std::pow(gh.nodes[i], p);
        // Scaled by int |x|^p e^(-x^2) dx, which odd moments cancel down to 0.
        const double abs_moment = std::tgamma(0.5 * (p + 1));
        const double exact_m = p % 2 == 1 ? 0.0 : abs_moment;
        gh_err = std::max(gh_err, std::abs(sum - exact_m) / std::max(1.0, abs_moment));
    }
    r.add("quadrature.gauss_hermite", "int x^p e^(-x^2) dx = Gamma((p+1)/2)", gh_err, 1e-12);
    return r;
}

// ---------------------------------------------------------------- coherent

Report coherent_suite(const SuiteConfig& cfg) {
    Report r{"coherent", cfg, {}, {}, {}};
    using namespace coherent;
    const int m = cfg.cutoff;
    const quad::ComplexGaussRule rule = quad::build_rule(cfg.radial, cfg.angular);
    try {
        require_certified(rule, m, "coherent suite");
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    const auto a_hol = resolution_check(ResolutionKind::a_hol, m, rule);
    const auto hol = resolution_check(ResolutionKind::hol, m, rule);
    r.add("coherent.resolution_a_hol", "int |eta_z><eta_z| dnu = P_a-hol", a_hol.max_deviation, 1e-10);
    r.add("coherent.resolution_hol", "int |breve eta><breve eta| dnu = P_hol", hol.max_deviation, 1e-10);

    {
        const int mb = std::min(m, 8);
        const int rb = std::max(std::min(cfg.radial, 20), (mb + 2) / 2);
        const int kb = std::max(std::min(cfg.angular, 20), mb + 1);
        const auto bcs_rule = quad::build_rule(rb, kb);
        const auto res = resolution_check(ResolutionKind::bcs, mb, bcs_rule);
        r.add("coherent.resolution_bcs", "int int |eta_bcs><eta_bcs| dnu dnu = I", res.max_deviation, 1e-10);
    }

    const auto iso = partial_isometry(IsometryKind::a_hol_to_hol, m, rule);
    const auto iso_back = partial_isometry(IsometryKind::hol_to_a_hol, m, rule);
    const Index d = static_cast<Index>(m + 1) * (m + 1);
    auto unit = [d](Index idx) {
        CVector v = CVector::Zero(d);
        v(idx) = 1.0;
        return v;
    };
    const int top = std::min(m, 2);
    const CVector h20 = unit(static_cast<Index>(top) * (m + 1));
    const CVector h02 = unit(top);
    r.add("coherent.isometry_image", "J P_a-hol H_20 = H_02", (iso.apply(h20) - h02).norm(), 1e-10);
    r.add("coherent.isometry_kernel", "J P_a-hol H_02 = 0", iso.apply(h02).norm(), 1e-10);
    const TruncatedMap round = compose(iso_back, iso);
    r.add("coherent.isometry_composition", "composition = P_a-hol",
          distance(round, projector(ResolutionKind::a_hol, m)), 1e-10);
    const TruncatedMap j = J_map(m);
    r.add("coherent.cross_projector", "J P_hol J = P_a-hol",
          distance(compose(j, compose(projector(ResolutionKind::hol, m), j)), projector(ResolutionKind::a_hol, m)), 1e-12);

    double vcs = 0.0;
    for (const Complex z : {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(0.5, 0.5), Complex(-1.2, 0.3)}) {
        const auto res = vector_cs_check(z, m);
        vcs = std::max(vcs, std::max(res.plus, res.minus) / scaled_bound(1.0, res.bound));
    }
    r.add("coherent.vector_cs", "A+ eta_z = z eta_z, A- breve eta = zbar breve eta (relative to tail bound)", vcs, 1.0);

    const auto spectral = modular_spectral_check(cfg.beta, m);
    r.add("coherent.delta_vs_core", "exp(-beta (n - l)) = alpha_n / alpha_l", spectral.delta_vs_core, 1e-12);
    r.add("coherent.kms_vector_fixed", "Delta^(-it/beta) X = X", spectral.kms_vector_fixed, 1e-13);
    r.add("coherent.generator_flow", "Delta^(-it/beta) A+ Delta^(it/beta) = e^(-it) A+", spectral.generator_flow, 1e-12);
    r.add("coherent.algebra_preserved", "flowed U+ commutes with U-", spectral.algebra_preserved, 1e-12);

    {
        SplitMix64 rng = suite_rng(cfg, 6);
        const Complex u = rng.unit_square() - Complex(0.5, 0.5);
        const Complex v = rng.unit_square() - Complex(0.5, 0.5);
        const CoherentCoeffs b = bcs(u, v, m);
        double jerr = (J_swap(J_swap(b)).c - b.c).norm();
        jerr = std::max(jerr, (J_swap(b).c - bcs(v, u, m).c).norm());
        jerr = std::max(jerr, (J_swap(eta(u, m)).c - eta_breve(std::conj(u), m).c).norm());
        r.add("coherent.J_conjugation", "J eta_bcs(u, v) = eta_bcs(v, u), J^2 = I", jerr, 1e-14);
    }
    const KmsVector x = kms_vector(cfg.beta, m);
    r.add("coherent.J_kms_vector", "J X = X", (J_swap(x.coeffs).c - x.coeffs.c).norm(), 1e-13);

    {
        CMatrix up = CMatrix::Zero(d, d);
        CMatrix down = CMatrix::Zero(d, d);
        for (int n = 0; n <= m; ++n)
            for (int l = 0; l <= m; ++l) {
                up(n * (m + 1) + l, n * (m + 1) + l) = l + 0.5;
                down(n * (m + 1) + l, n * (m + 1) + l) = n + 0.5;
            }
        const TruncatedMap lhs = compose(j, TruncatedMap{m, up, false});
        const TruncatedMap rhs = compose(TruncatedMap{m, down, false}, j);
        r.add("coherent.J_hamiltonians", "J H_up = H_down J", distance(lhs, rhs), 0.0);
        const TruncatedMap ap{m, A_plus_matrix(m), false};
        const TruncatedMap am{m, A_minus_matrix(m), false};
        r.add("coherent.J_algebras", "J A+ J = A-", distance(compose(j, compose(ap, j)), am), 0.0);
        const hs::SuperOp polar_j = hs::conjugation_superop(m + 1);
        r.add("coherent.J_is_modular", "J on H_nl = modular conjugation on X_nl",
              linalg::frobenius_distance(polar_j.matrix, j.matrix), 0.0);
    }

    {
        const Complex alpha(0.5, 0.3);
        const auto disp = displacement_check(alpha, std::max<Index>(40, cfg.ncut));
        r.add("coherent.displacement", "e^(|a|^2/2) exp(a A+* - conj(a) A+) = exp(a A+*) exp(-conj(a) A+)", disp.deviation,
              1e-8);
        r.add("coherent.displacement_vacuum", "D(a) H_00 = e^(-|a|^2/2) sum a^n/sqrt(n!) H_n0", disp.vacuum_deviation, 1e-10);
    }

    {
        SplitMix64 rng = suite_rng(cfg, 7);
        CVector f(m + 1);
        for (int n = 0; n <= m; ++n) f(n) = rng.unit_square();
        const std::vector<Complex> pts{{0.0, 0.0}, {0.7, -0.2}, {-1.1, 0.9}};
        r.add("coherent.reproducing", "f(wbar) = int K(wbar, z) f(zbar) dnu", reproducing_check(f, pts, rule),
              scaled_bound(1e-10, f.norm()));
        double sym = 0.0;
        double partial = 0.0;
        for (const Complex w : pts)
            for (const Complex z : pts) {
                sym = std::max(sym, std::abs(kernel(w, z, m) - std::conj(kernel(z, w, m))));
                Complex direct = 0.0;
                Complex term = 1.0;
                for (int n = 0; n <= 25; ++n) {
                    if (n > 0) term *= std::conj(w) * z / static_cast<double>(n);
                    direct += term;
                }
                partial = std::max(partial, std::abs(eval(eta(z, 25), w) - direct));
            }
        r.add("coherent.kernel_symmetry", "K(wbar, z) = conj K(zbar, w)", sym, 1e-14);
        r.add("coherent.eta_pointwise", "sum z^n/sqrt(n!) H_n0(wbar, w) = partial sum of e^(wbar z)", partial, 1e-10);
    }

    {
        const TruncatedMap literal = literal_cross_operator(m, rule);
        CMatrix p00 = CMatrix::Zero(d, d);
        p00(0, 0) = 1.0;
        const double wit = (literal.matrix - p00).norm();
        r.add("coherent.literal_cross_witness", "printed linear cross operator = |H_00><H_00|", wit, 1e-12);
        r.add_erratum({"cross_resolution",
                       "int |breve eta_zbar><eta_z| dnu is the partial isometry J P_a-hol",
                       "antilinear map f -> int breve eta_zbar <f | eta_z> dnu",
                       "distance of the printed linear operator from |H_00><H_00|",
                       wit});
    }

    for (auto& e : core_errata()) r.add_erratum(e);
    return r;
}

// ---------------------------------------------------------------- wigner

Report wigner_suite(const SuiteConfig& cfg) {
    Report r{"wigner", cfg, {}, {}, {}};
    if (cfg.ncut < 8) throw ConfigError("wigner suite needs --ncut >= 8");
    const Index nc = cfg.ncut;
    const double inv_root = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    const hs::HSVector x00 = hs::matrix_unit(nc, 0, 0);
    r.add("wigner.origin", "W X_00 (0, 0) = 1/sqrt(2 pi)", std::abs(landau::wigner_sample(x00, 0.0, 0.0) - inv_root), 1e-12);

    std::vector<std::pair<double, double>> grid;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) grid.emplace_back(-2.0 + i, -2.0 + j);
    const int top = static_cast<int>(std::min<Index>(3, nc - 1));

    const auto per_point = parallel_map(grid.size(), cfg.threads, [&](std::size_t g) {
        const auto [x, y] = grid[g];
        const Complex z = Complex(x, -y) / std::sqrt(2.0);
        const double gauss = std::exp(-0.5 * std::norm(z));
        const CMatrix hv = hermite::H_values(top, z);
        std::array<double, 3> err{};
        err[0] = std::abs(landau::wigner_sample(x00, x, y) - std::exp(-(x * x + y * y) / 4.0) * inv_root);
        for (int n = 0; n <= top; ++n)
            for (int l = 0; l <= top; ++l) {
                const Complex w = landau::wigner_sample(hs::matrix_unit(nc, n, l), x, y);
                err[1] = std::max(err[1], std::abs(w - gauss * hv(n, l) * inv_root));
                const Complex phase = std::pow(kI, n + l);
                err[2] = std::max(err[2], std::abs(w - phase * gauss * hv(l, n) * inv_root));
            }
        return err;
    });
    std::array<double, 3> worst{};
    for (const auto& e : per_point)
        for (std::size_t k = 0; k < 3; ++k) worst[k] = std::max(worst[k], e[k]);
    r.add("wigner.gaussian", "W X_00 = e^(-(x^2+y^2)/4)/sqrt(2 pi)", worst[0], 1e-6);
    r.add("wigner.printed_identity", "W X_nl = e^(-|z|^2/2) H_nl(zbar, z)/sqrt(2 pi), z = (x - iy)/sqrt2", worst[1], 1e-6);
    r.add("wigner.corrected_identity", "W X_nl = i^(n+l) e^(-|z|^2/2) H_ln(zbar, z)/sqrt(2 pi)", worst[2], 1e-6);
    r.add_erratum({"wigner_labels",
                   "W X_nl = Psi_nl with Psi_nl = e^(-|z|^2/2) H_nl(zbar, z)/sqrt(2 pi)",
                   "W X_nl = i^(n+l) Psi_ln",
                   "max deviation of the printed identity over n, l <= 3 on the 5x5 grid",
                   worst[1]});
    return r;
}

using SuiteFn = std::function<Report(const SuiteConfig&)>;

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> suites{
        {"modular", modular_suite}, {"kms", kms_suite},           {"landau", landau_suite},
        {"hermite", hermite_suite}, {"quadrature", quadrature_suite}, {"coherent", coherent_suite},
        {"wigner", wigner_suite},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"modular", "kms",      "landau", "hermite",
                                                "quadrature", "coherent", "wigner", "all"};
    return names;
}

std::vector<Erratum> core_errata() {
    return {a_plus_erratum(), modular_hamiltonian_erratum(), number_label_erratum(), explicit_sum_erratum()};
}

Report run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
        throw UsageError("unknown suite '" + name + "'");
    }
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();
    Report out;
    try {
        if (name == "all") {
            out = Report{"all", cfg, {}, {}, {}};
            for (const auto& suite : suite_names()) {
                if (suite == "all") continue;
                out.merge(registry().at(suite)(cfg));
            }
        } else {
            out = registry().at(name)(cfg);
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    } catch (const std::out_of_range& e) {
        throw ConfigError(e.what());
    } catch (const std::overflow_error& e) {
        throw ConfigError(e.what());
    }
    if (cfg.timing) {
        const auto stop = std::chrono::steady_clock::now();
        out.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    return out;
}

} // namespace mtk::verify
