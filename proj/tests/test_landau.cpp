#include "mtk/complex_hermite.hpp"
#include "mtk/landau.hpp"
#include "mtk/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace mtk;
using namespace mtk::landau;

namespace {

std::vector<FockLabel> labels_up_to(Index level) {
    std::vector<FockLabel> out;
    for (Index n = 0; n <= level; ++n)
        for (Index l = 0; n + l <= level; ++l) out.push_back({n, l});
    return out;
}

} // namespace

TEST_CASE("single-mode ladder") {
    CMatrix a2(2, 2);
    a2 << 0.0, 1.0, 0.0, 0.0;
    CHECK(ladder(2) == a2);
    const CMatrix a = ladder(7);
    const CMatrix number = a.adjoint() * a;
    for (Index i = 0; i < 7; ++i)
        for (Index j = 0; j < 7; ++j) CHECK(std::abs(number(i, j) - (i == j ? double(i) : 0.0)) < 1e-14);
    CMatrix edge = CMatrix::Identity(7, 7);
    edge(6, 6) -= 7.0;
    CHECK((a * a.adjoint() - a.adjoint() * a - edge).norm() < 1e-13);
    CHECK_THROWS_AS(ladder(1), std::invalid_argument);
    CHECK_THROWS_AS(ModeCut(1), std::invalid_argument);
}

TEST_CASE("Hermite functions") {
    CHECK(hermite_fn(0, 0.0) == doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-15));
    CHECK(hermite_fn(0, 0.0) == doctest::Approx(0.7511255444649425));
    CHECK(hermite_fn(1, 0.0) == 0.0);
    // zeta_2(x) = pi^{-1/4} (2x^2 - 1) e^{-x^2/2} / sqrt2
    const double x = 0.8;
    const double z2 = std::pow(std::numbers::pi, -0.25) * (2 * x * x - 1) * std::exp(-x * x / 2) / std::sqrt(2.0);
    CHECK(hermite_fn(2, x) == doctest::Approx(z2).epsilon(1e-14));
    CHECK(hermite_fn(400, 60.0) == 0.0);

    const quad::GaussRule gh = quad::gauss_hermite(60);
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n) {
            double s = 0.0;
            for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
                const double t = gh.nodes[i];
                s += gh.weights[i] * std::exp(t * t) * hermite_fn(m, t) * hermite_fn(n, t);
            }
            CHECK(std::abs(s - (m == n ? 1.0 : 0.0)) <= 1e-10);
        }
}

TEST_CASE("CCR on the interior") {
    const ModeCut cut(16);
    const auto l = build_A_pm(cut);
    const SparseOp id = sparse_identity(cut.dim());
    const SparseOp zero(cut.dim(), cut.dim());
    const std::vector<const SparseOp*> ops{&l.A_plus, &l.A_plus_dag, &l.A_minus, &l.A_minus_dag};
    int checked = 0;
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i; j < ops.size(); ++j) {
            const SparseOp* want = (i == 0 && j == 1) || (i == 2 && j == 3) ? &id : &zero;
            CHECK(interior_deviation(cut, commutator(*ops[i], *ops[j]), *want) <= 1e-12);
            ++checked;
        }
    CHECK(checked == 10);

    // adjoints are adjoints
    CHECK(interior_deviation(cut, SparseOp(l.A_plus.adjoint()), l.A_plus_dag) == 0.0);
    CHECK(interior_deviation(cut, SparseOp(l.A_minus.adjoint()), l.A_minus_dag) == 0.0);

    // outside the interior the truncation shows up
    const SparseOp c = commutator(l.A_plus, l.A_plus_dag);
    double worst = 0.0;
    for (Index k = 0; k < c.outerSize(); ++k)
        for (SparseOp::InnerIterator it(c, k); it; ++it)
            worst = std::max(worst, std::abs(it.value() - (it.row() == it.col() ? 1.0 : 0.0)));
    CHECK(worst > 1.0);
}

TEST_CASE("printed A+ breaks [A+, A-*] = 0") {
    const ModeCut cut(16);
    const auto lit = build_A_pm(cut, LadderForm::literal);
    const SparseOp want = -0.125 * sparse_identity(cut.dim());
    CHECK(interior_deviation(cut, commutator(lit.A_plus, lit.A_minus_dag), want) <= 1e-12);
}

TEST_CASE("A+- from Q+- and P+-") {
    const ModeCut cut(12);
    const auto a = build_A_pm(cut);
    const auto b = build_A_pm_from_qp(cut);
    CHECK(SparseOp(a.A_plus - b.A_plus).coeffs().cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(SparseOp(a.A_minus - b.A_minus).coeffs().cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(SparseOp(a.A_plus_dag - b.A_plus_dag).coeffs().cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(SparseOp(a.A_minus_dag - b.A_minus_dag).coeffs().cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("Hamiltonians") {
    const ModeCut cut(16);
    const auto h = hamiltonians(cut);
    const SparseOp zero(cut.dim(), cut.dim());
    const SparseOp half = 0.5 * sparse_identity(cut.dim());
    CHECK(interior_deviation(cut, h.H_up, h.H_0 + h.H_int_up) <= 1e-12);
    CHECK(interior_deviation(cut, h.H_down, h.H_0 + h.H_int_down) <= 1e-12);
    CHECK(interior_deviation(cut, h.H_int_down, -h.H_int_up) <= 1e-12);
    CHECK(interior_deviation(cut, commutator(h.H_up, h.H_down), zero) <= 1e-12);
    CHECK(interior_deviation(cut, h.H_up, h.N_minus + half) <= 1e-12);
    CHECK(interior_deviation(cut, h.H_down, h.N_plus + half) <= 1e-12);
    CHECK(interior_deviation(cut, intertwine(h.H_up), h.H_down) <= 1e-12);
    CHECK(interior_deviation(cut, intertwine(h.N_plus), h.N_minus) <= 1e-12);
}

TEST_CASE("joint eigenbasis") {
    for (Index ncut : {12, 16}) {
        const ModeCut cut(ncut);
        const auto h = hamiltonians(cut);
        const CVector p = fock_psi(cut, {2, 3});
        CHECK(std::abs(p.norm() - 1.0) <= 1e-10);
        CHECK(interior_norm(cut, h.H_up * p - 3.5 * p) <= 1e-9);
        CHECK(interior_norm(cut, h.H_down * p - 2.5 * p) <= 1e-9);
    }

    const ModeCut cut(16);
    const auto h = hamiltonians(cut);
    const auto lad = build_A_pm(cut);
    const LandauBasis basis(cut, 6);
    CHECK(basis.working_cut() >= 2 * 16 + 6);
    CHECK(basis.vacuum_residual() <= 1e-12);
    CHECK(basis.min_shell_singular_value() > 0.1);
    const CVector vac = basis.psi({0, 0});
    CHECK(interior_norm(cut, lad.A_plus * vac) <= 1e-12);
    CHECK(interior_norm(cut, lad.A_minus * vac) <= 1e-12);

    for (const auto& lab : labels_up_to(6)) {
        const CVector p = basis.psi(lab);
        CHECK(interior_norm(cut, h.H_up * p - (lab.l + 0.5) * p) <= 1e-9);
        CHECK(interior_norm(cut, h.H_down * p - (lab.n + 0.5) * p) <= 1e-9);
        CHECK((intertwiner(p) - basis.psi({lab.l, lab.n})).norm() <= 1e-9);
    }

    // raising: A+* Psi_nl = sqrt(n+1) Psi_(n+1,l), checked where the tail is negligible
    {
        const ModeCut wide(40);
        const LandauBasis wb(wide, 5);
        const auto wl = build_A_pm(wide);
        CHECK(interior_norm(wide, wl.A_plus_dag * wb.psi({1, 2}) - std::sqrt(2.0) * wb.psi({2, 2})) <= 1e-9);
        CHECK(interior_norm(wide, wl.A_minus_dag * wb.psi({1, 2}) - std::sqrt(3.0) * wb.psi({1, 3})) <= 1e-9);
    }

    CHECK_THROWS_AS(LandauBasis(cut, 15), std::out_of_range);
    CHECK_THROWS_AS(basis.psi({5, 2}), std::out_of_range);
    CHECK_THROWS_AS(fock_psi(cut, {10, 5}), std::out_of_range);
}

TEST_CASE("orthonormality of the Fock states") {
    // In the working cut the states are exactly orthonormal.
    const ModeCut cut(16);
    const LandauBasis basis(cut, 4);
    const auto labels = labels_up_to(4);
    for (const auto& a : labels)
        for (const auto& b : labels) {
            const double delta = (a.n == b.n && a.l == b.l) ? 1.0 : 0.0;
            const Complex ip = (basis.psi_working(a).conjugate().cwiseProduct(basis.psi_working(b))).sum();
            CHECK(std::abs(ip - delta) <= 1e-9);
            // Projection to the Ncut square costs at most the Cauchy-Schwarz tail term.
            const double ta = basis.tail_norm(a);
            const double tb = basis.tail_norm(b);
            const double bound = ta * tb / std::sqrt((1 - ta * ta) * (1 - tb * tb));
            CHECK(std::abs(basis.psi(a).dot(basis.psi(b)) - delta) <= bound + 1e-12);
        }

    // With a wider cut the tail is negligible and the projected states pass directly.
    const ModeCut wide(40);
    const LandauBasis wbasis(wide, 4);
    for (const auto& a : labels)
        for (const auto& b : labels) {
            const double delta = (a.n == b.n && a.l == b.l) ? 1.0 : 0.0;
            CHECK(std::abs(wbasis.psi(a).dot(wbasis.psi(b)) - delta) <= 1e-9);
        }
}

TEST_CASE("each level is degenerate") {
    const ModeCut cut(16);
    const auto h = hamiltonians(cut);
    const LandauBasis basis(cut, 6);
    for (Index l = 0; l <= 2; ++l) {
        for (Index n = 0; n <= 4; ++n) {
            const CVector p = basis.psi({n, l});
            CHECK(interior_norm(cut, h.H_up * p - (l + 0.5) * p) <= 1e-9);
        }
    }
}

TEST_CASE("Wigner samples") {
    const Index nc = 64;
    const double inv_root = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    const hs::HSVector x00 = hs::matrix_unit(nc, 0, 0);
    CHECK(std::abs(wigner_sample(x00, 0.0, 0.0) - inv_root) <= 1e-12);
    CHECK(std::abs(wigner_sample(x00, 0.0, 0.0) - 0.398942) <= 1e-6);

    const CMatrix u = wigner_unitary(nc, 0.7, -1.1);
    CHECK((u.adjoint() * u - CMatrix::Identity(nc, nc)).norm() <= 1e-12);

    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const double x = -2.0 + i;
            const double y = -2.0 + j;
            CHECK(std::abs(wigner_sample(x00, x, y) - std::exp(-(x * x + y * y) / 4) * inv_root) <= 1e-6);
            const Complex z = Complex(x, -y) / std::sqrt(2.0);
            const double gauss = std::exp(-std::norm(z) / 2);
            for (int n = 0; n <= 3; ++n)
                for (int l = 0; l <= 3; ++l) {
                    // The transform carries a label transpose and a phase i^(n+l).
                    const Complex w = wigner_sample(hs::matrix_unit(nc, n, l), x, y);
                    const Complex want = std::pow(kI, n + l) * gauss * hermite::H_basis(l, n).eval(z) * inv_root;
                    CHECK(std::abs(w - want) <= 1e-6);
                }
        }

    // The printed form W X_nl = e^{-|z|^2/2} H_nl / sqrt(2 pi) holds on the even diagonal only.
    const double x = 0.6;
    const double y = -1.3;
    const Complex z = Complex(x, -y) / std::sqrt(2.0);
    const double gauss = std::exp(-std::norm(z) / 2);
    auto printed = [&](int n, int l) {
        return std::abs(wigner_sample(hs::matrix_unit(nc, n, l), x, y) - gauss * hermite::H_basis(n, l).eval(z) * inv_root);
    };
    CHECK(printed(0, 0) <= 1e-6);
    CHECK(printed(2, 2) <= 1e-6);
    CHECK(printed(1, 1) > 1e-3);
    CHECK(printed(0, 1) > 1e-3);
}
