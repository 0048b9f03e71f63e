// coherent.cpp: bi-coherent and coherent states on the truncated basis {H_nk}

#include "mtk/coherent.hpp"

#include "mtk/landau.hpp"
#include "mtk/modular.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mtk::coherent {

namespace {

void require_cutoff(int m, const char* where) {
    if (m < 0) throw std::invalid_argument(std::string(where) + ": cutoff must be non-negative");
}

// p(n) = x^n / sqrt(n!) for n <= m, by running products.
CVector scaled_powers(Complex x, int m) {
    CVector p(m + 1);
    p(0) = 1.0;
    for (int n = 1; n <= m; ++n) p(n) = p(n - 1) * x / std::sqrt(static_cast<double>(n));
    return p;
}

Index flat_index(int n, int k, int m) {
    return static_cast<Index>(n) * (m + 1) + k;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

const std::vector<double>& flow_times() {
    static const std::vector<double> times{0.0, 0.3, 1.0, 2.5, -1.7};
    return times;
}

} // namespace

CoherentCoeffs::CoherentCoeffs(int m) : cutoff(m) {
    require_cutoff(m, "CoherentCoeffs");
    c = CMatrix::Zero(m + 1, m + 1);
}

CVector CoherentCoeffs::flat() const {
    CVector v(c.size());
    for (int n = 0; n <= cutoff; ++n)
        for (int k = 0; k <= cutoff; ++k) v(flat_index(n, k, cutoff)) = c(n, k);
    return v;
}

CoherentCoeffs CoherentCoeffs::from_flat(const CVector& v, int m) {
    CoherentCoeffs out(m);
    if (v.size() != out.c.size()) throw std::invalid_argument("CoherentCoeffs::from_flat: length mismatch");
    for (int n = 0; n <= m; ++n)
        for (int k = 0; k <= m; ++k) out.c(n, k) = v(flat_index(n, k, m));
    return out;
}

CVector TruncatedMap::apply(const CVector& v) const {
    if (v.size() != matrix.cols()) throw std::invalid_argument("TruncatedMap::apply: length mismatch");
    return antilinear ? CVector(matrix * v.conjugate()) : CVector(matrix * v);
}

TruncatedMap compose(const TruncatedMap& a, const TruncatedMap& b) {
    if (a.cutoff != b.cutoff) throw std::invalid_argument("compose: cutoff mismatch");
    if (!a.antilinear) return {a.cutoff, a.matrix * b.matrix, b.antilinear};
    return {a.cutoff, a.matrix * b.matrix.conjugate(), !b.antilinear};
}

double distance(const TruncatedMap& a, const TruncatedMap& b) {
    if (a.antilinear != b.antilinear) {
        throw std::invalid_argument("distance: cannot compare a linear with an antilinear map");
    }
    return linalg::frobenius_distance(a.matrix, b.matrix);
}

CoherentCoeffs bcs(Complex u, Complex v, int m) {
    CoherentCoeffs out(m);
    out.c = scaled_powers(v, m) * scaled_powers(std::conj(u), m).transpose();
    return out;
}

CoherentCoeffs eta(Complex z, int m) {
    CoherentCoeffs out(m);
    out.c.col(0) = scaled_powers(z, m);
    return out;
}

CoherentCoeffs eta_breve(Complex zbar, int m) {
    CoherentCoeffs out(m);
    out.c.row(0) = scaled_powers(zbar, m).transpose();
    return out;
}

CoherentCoeffs J_swap(const CoherentCoeffs& c) {
    CoherentCoeffs out(c.cutoff);
    out.c = c.c.adjoint();
    return out;
}

TruncatedMap J_map(int m) {
    require_cutoff(m, "J_map");
    const Index d = static_cast<Index>(m + 1) * (m + 1);
    TruncatedMap j{m, CMatrix::Zero(d, d), true};
    for (int n = 0; n <= m; ++n)
        for (int k = 0; k <= m; ++k) j.matrix(flat_index(n, k, m), flat_index(k, n, m)) = 1.0;
    return j;
}

KmsVector kms_vector(double beta, int m) {
    if (!(beta > 0.0)) throw std::invalid_argument("kms_vector: beta must be positive");
    KmsVector out{CoherentCoeffs(m), 0.0};
    for (int n = 0; n <= m; ++n) out.coeffs.c(n, n) = std::exp(-0.5 * beta * n);
    const double norm = out.coeffs.c.norm();
    out.prefactor_norm = std::sqrt(-std::expm1(-beta)) * norm;
    out.coeffs.c /= norm;
    return out;
}

Complex eval(const CoherentCoeffs& c, Complex w) {
    const CMatrix h = hermite::H_values(c.cutoff, w);
    return (c.c.cwiseProduct(h)).sum();
}

Complex kernel(Complex w, Complex z, int m) {
    require_cutoff(m, "kernel");
    const Complex x = std::conj(w) * z;
    Complex term = 1.0;
    Complex sum = 1.0;
    for (int n = 1; n <= m; ++n) {
        term *= x / static_cast<double>(n);
        sum += term;
    }
    return sum;
}

void require_certified(const quad::ComplexGaussRule& rule, int m, const char* where) {
    if (!rule.certifies_block(m, m)) {
        std::ostringstream msg;
        msg << where << ": rule (R = " << rule.radial_order << ", K = " << rule.angular_order
            << ") is not exact for zbar^a z^b with a, b <= " << m << "; need " << m << " <= 2R - 1 and " << m
            << " < K";
        throw std::invalid_argument(msg.str());
    }
}

ResolutionResult resolution_check(ResolutionKind kind, int m, const quad::ComplexGaussRule& rule) {
    require_cutoff(m, "resolution_check");
    require_certified(rule, m, "resolution_check");
    const Index d = static_cast<Index>(m + 1) * (m + 1);
    ResolutionResult out;
    out.matrix = CMatrix::Zero(d, d);
    if (kind == ResolutionKind::bcs) {
        const auto nv = static_cast<Index>(rule.size());
        CMatrix chunk(d, nv);
        for (std::size_t iu = 0; iu < rule.size(); ++iu) {
            for (std::size_t iv = 0; iv < rule.size(); ++iv) {
                chunk.col(static_cast<Index>(iv)) =
                    std::sqrt(rule.weights[iv]) * bcs(rule.nodes[iu], rule.nodes[iv], m).flat();
            }
            out.matrix.noalias() += rule.weights[iu] * chunk * chunk.adjoint();
        }
        out.expected = CMatrix::Identity(d, d);
    } else {
        for (std::size_t i = 0; i < rule.size(); ++i) {
            const Complex z = rule.nodes[i];
            const CVector c = kind == ResolutionKind::a_hol ? eta(z, m).flat() : eta_breve(std::conj(z), m).flat();
            out.matrix.noalias() += rule.weights[i] * c * c.adjoint();
        }
        out.expected = projector(kind, m).matrix;
    }
    out.max_deviation = (out.matrix - out.expected).cwiseAbs().maxCoeff();
    return out;
}

TruncatedMap projector(ResolutionKind kind, int m) {
    require_cutoff(m, "projector");
    const Index d = static_cast<Index>(m + 1) * (m + 1);
    TruncatedMap p{m, CMatrix::Zero(d, d), false};
    for (int n = 0; n <= m; ++n) {
        switch (kind) {
        case ResolutionKind::a_hol: p.matrix(flat_index(n, 0, m), flat_index(n, 0, m)) = 1.0; break;
        case ResolutionKind::hol: p.matrix(flat_index(0, n, m), flat_index(0, n, m)) = 1.0; break;
        case ResolutionKind::bcs: p.matrix = CMatrix::Identity(d, d); break;
        }
    }
    return p;
}

TruncatedMap partial_isometry(IsometryKind kind, int m, const quad::ComplexGaussRule& rule) {
    require_cutoff(m, "partial_isometry");
    require_certified(rule, m, "partial_isometry");
    const Index d = static_cast<Index>(m + 1) * (m + 1);
    TruncatedMap out{m, CMatrix::Zero(d, d), true};
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const Complex z = rule.nodes[i];
        const CVector holo = eta(z, m).flat();
        const CVector anti = eta_breve(std::conj(z), m).flat();
        if (kind == IsometryKind::a_hol_to_hol) {
            out.matrix.noalias() += rule.weights[i] * anti * holo.transpose();
        } else {
            out.matrix.noalias() += rule.weights[i] * holo * anti.transpose();
        }
    }
    return out;
}

TruncatedMap literal_cross_operator(int m, const quad::ComplexGaussRule& rule) {
    require_cutoff(m, "literal_cross_operator");
    require_certified(rule, m, "literal_cross_operator");
    const Index d = static_cast<Index>(m + 1) * (m + 1);
    TruncatedMap out{m, CMatrix::Zero(d, d), false};
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const Complex z = rule.nodes[i];
        out.matrix.noalias() += rule.weights[i] * eta_breve(std::conj(z), m).flat() * eta(z, m).flat().adjoint();
    }
    return out;
}

CMatrix A_plus_matrix(int m) {
    require_cutoff(m, "A_plus_matrix");
    if (m == 0) return CMatrix::Zero(1, 1);
    return kron(landau::ladder(m + 1), CMatrix::Identity(m + 1, m + 1));
}

CMatrix A_minus_matrix(int m) {
    require_cutoff(m, "A_minus_matrix");
    if (m == 0) return CMatrix::Zero(1, 1);
    return kron(CMatrix::Identity(m + 1, m + 1), landau::ladder(m + 1));
}

VectorCsResidual vector_cs_check(Complex z, int m) {
    if (m < 2) throw std::invalid_argument("vector_cs_check: cutoff must be at least 2");
    VectorCsResidual out;
    const CVector e = eta(z, m).flat();
    const CVector eb = eta_breve(std::conj(z), m).flat();
    const CVector rp = A_plus_matrix(m) * e - z * e;
    const CVector rm = A_minus_matrix(m) * eb - std::conj(z) * eb;
    double sp = 0.0;
    double sm = 0.0;
    for (int n = 0; n < m; ++n) {
        sp += std::norm(rp(flat_index(n, 0, m)));
        sm += std::norm(rm(flat_index(0, n, m)));
    }
    out.plus = std::sqrt(sp);
    out.minus = std::sqrt(sm);
    out.bound = 10.0 * std::exp((m + 1) * std::log(std::max(std::abs(z), 1e-300)) - 0.5 * std::lgamma(m + 2.0));
    return out;
}

CMatrix delta_diagonal(double beta, int m) {
    require_cutoff(m, "delta_diagonal");
    const Index d = static_cast<Index>(m + 1) * (m + 1);
    CMatrix delta = CMatrix::Zero(d, d);
    for (int n = 0; n <= m; ++n)
        for (int l = 0; l <= m; ++l) delta(flat_index(n, l, m), flat_index(n, l, m)) = std::exp(-beta * (n - l));
    return delta;
}

ModularSpectral modular_spectral_check(double beta, int m) {
    if (!(beta > 0.0)) throw std::invalid_argument("modular_spectral_check: beta must be positive");
    if (m < 1) throw std::invalid_argument("modular_spectral_check: cutoff must be at least 1");
    ModularSpectral out;
    const CMatrix delta = delta_diagonal(beta, m);
    const modular::GibbsWeights w = modular::build_weights(beta, m + 1);
    for (int n = 0; n <= m; ++n) {
        for (int l = 0; l <= m; ++l) {
            const double core = std::exp(w.log_alpha(n) - w.log_alpha(l));
            const double here = delta(flat_index(n, l, m), flat_index(n, l, m)).real();
            out.delta_vs_core = std::max(out.delta_vs_core, std::abs(here - core) / std::max(1.0, core));
        }
    }
    const CVector x = kms_vector(beta, m).coeffs.flat();
    const CMatrix ap = A_plus_matrix(m);
    const CMatrix am = A_minus_matrix(m);
    const auto eig = linalg::hermitian_eig(delta);
    for (double t : flow_times()) {
        const double s = -t / beta;
        const CMatrix u = linalg::func_calculus(eig, [s](double lam) { return std::exp(kI * s * std::log(lam)); });
        out.kms_vector_fixed = std::max(out.kms_vector_fixed, (u * x - x).norm());
        const CMatrix flowed_p = u * ap * u.adjoint();
        const CMatrix flowed_m = u * am * u.adjoint();
        const double dev = std::max((flowed_p - std::exp(-kI * t) * ap).norm(), (flowed_m - std::exp(kI * t) * am).norm());
        out.generator_flow = std::max(out.generator_flow, dev);
        const double comm = std::max(linalg::commutator(flowed_p, am).norm(),
                                     linalg::commutator(flowed_p, am.adjoint()).norm());
        out.algebra_preserved = std::max(out.algebra_preserved, comm);
    }
    return out;
}

DisplacementResult displacement_check(Complex alpha, Index ncut) {
    const double a2 = std::norm(alpha);
    if (std::abs(alpha) > 1.5) throw std::invalid_argument("displacement_check: requires |alpha| <= 1.5");
    const double need = 8.0 * a2 + 20.0;
    if (static_cast<double>(ncut) < need) {
        std::ostringstream msg;
        msg << "displacement_check: Ncut = " << ncut << " is below the required 8|alpha|^2 + 20 = " << need;
        throw std::invalid_argument(msg.str());
    }
    const CMatrix a = landau::ladder(ncut);
    const CMatrix gen = alpha * a.adjoint() - std::conj(alpha) * a;
    // gen is anti-Hermitian: gen = i K with K Hermitian.
    const CMatrix k = -kI * gen;
    const CMatrix disp =
        linalg::func_calculus(linalg::hermitian_eig((k + k.adjoint()) / 2.0), [](double lam) { return std::exp(kI * lam); });
    const CMatrix lhs = std::exp(0.5 * a2) * disp;

    auto nilpotent_exp = [ncut](const CMatrix& x) {
        CMatrix sum = CMatrix::Identity(ncut, ncut);
        CMatrix term = sum;
        for (Index j = 1; j < ncut; ++j) {
            term = term * x / static_cast<double>(j);
            sum += term;
        }
        return sum;
    };
    const CMatrix rhs = nilpotent_exp(alpha * a.adjoint()) * nilpotent_exp(-std::conj(alpha) * a);

    DisplacementResult out;
    out.block = ncut / 2;
    out.deviation = (lhs.topLeftCorner(out.block, out.block) - rhs.topLeftCorner(out.block, out.block)).norm();
    const CVector expected = std::exp(-0.5 * a2) * scaled_powers(alpha, static_cast<int>(out.block - 1));
    out.vacuum_deviation = (disp.col(0).head(out.block) - expected).norm();
    return out;
}

double reproducing_check(const CVector& f, const std::vector<Complex>& points, const quad::ComplexGaussRule& rule) {
    if (f.size() < 1) throw std::invalid_argument("reproducing_check: empty coefficient vector");
    const int m = static_cast<int>(f.size()) - 1;
    require_certified(rule, m, "reproducing_check");
    auto f_at = [&f, m](Complex z) { return (scaled_powers(std::conj(z), m).array() * f.array()).sum(); };
    double worst = 0.0;
    for (const Complex w : points) {
        const Complex rhs = quad::integrate(rule, [&](Complex z) { return kernel(w, z, m) * f_at(z); });
        worst = std::max(worst, std::abs(rhs - f_at(w)));
    }
    return worst;
}

} // namespace mtk::coherent
