// coherent.hpp: bi-coherent and coherent states on the truncated basis {H_nk : n, k <= M}
//
// Coefficient vectors are flattened with H_nk at n * (M + 1) + k, the same
// ordering as matrix units X_nk in hs_space.

#pragma once

#include "mtk/linalg.hpp"
#include "mtk/complex_hermite.hpp"
#include "mtk/quadrature.hpp"

#include <vector>

namespace mtk::coherent {

struct CoherentCoeffs {
    int cutoff = 0;
    /// c(n, k) multiplies H_nk.
    CMatrix c;

    explicit CoherentCoeffs(int m);
    Index size() const { return c.rows(); }
    CVector flat() const;
    static CoherentCoeffs from_flat(const CVector& v, int m);
};

/// Real-linear map on span{H_nk}: v -> matrix v, or matrix conj(v) when antilinear.
struct TruncatedMap {
    int cutoff = 0;
    CMatrix matrix;
    bool antilinear = false;

    CVector apply(const CVector& v) const;
};

TruncatedMap compose(const TruncatedMap& a, const TruncatedMap& b);
double distance(const TruncatedMap& a, const TruncatedMap& b);

/// c(n, k) = v^n u_bar^k / sqrt(n! k!).
CoherentCoeffs bcs(Complex u, Complex v, int m);
/// eta_z: c(n, 0) = z^n / sqrt(n!).
CoherentCoeffs eta(Complex z, int m);
/// breve eta_zbar: c(0, n) = zbar^n / sqrt(n!).
CoherentCoeffs eta_breve(Complex zbar, int m);
/// c'(n, k) = conj(c(k, n)).
CoherentCoeffs J_swap(const CoherentCoeffs& c);
/// J_swap as an antilinear truncated map.
TruncatedMap J_map(int m);

/// KMS vector sum_n e^{-n beta / 2} H_nn, renormalized to unit norm on the
/// truncation; prefactor_norm is the norm it has with prefactor sqrt(1 - e^{-beta}).
struct KmsVector {
    CoherentCoeffs coeffs;
    double prefactor_norm = 0.0;
};
KmsVector kms_vector(double beta, int m);

/// sum_n c(n, k) H_nk(wbar, w) for the given coefficients.
Complex eval(const CoherentCoeffs& c, Complex w);

/// Truncated kernel K_M(wbar, z) = sum_{n <= M} (wbar z)^n / n!.
Complex kernel(Complex w, Complex z, int m);

enum class ResolutionKind { a_hol, hol, bcs };
enum class IsometryKind { a_hol_to_hol, hol_to_a_hol };

/// Throws std::invalid_argument citing the certificate when the rule does not
/// integrate every needed monomial exactly.
void require_certified(const quad::ComplexGaussRule& rule, int m, const char* where);

struct ResolutionResult {
    CMatrix matrix;
    CMatrix expected;
    double max_deviation = 0.0;
};

/// sum_i w_i c(z_i) c(z_i)^H. For bcs the same rule is used for u and v and
/// the double sum is accumulated one u node at a time.
ResolutionResult resolution_check(ResolutionKind kind, int m, const quad::ComplexGaussRule& rule);

/// P_a-hol (H_n0) or P_hol (H_0n) as a truncated map.
TruncatedMap projector(ResolutionKind kind, int m);

/// The antilinear map f -> int breve eta_zbar <f | eta_z> dnu (or its mirror).
/// Its linear part is int c_target(z) c_source(z)^T dnu.
TruncatedMap partial_isometry(IsometryKind kind, int m, const quad::ComplexGaussRule& rule);

/// int |breve eta_zbar><eta_z| dnu read as a linear operator.
TruncatedMap literal_cross_operator(int m, const quad::ComplexGaussRule& rule);

/// Ladder operators on span{H_nk}: A+ H_nk = sqrt(n) H_{n-1,k}, A- H_nk = sqrt(k) H_{n,k-1}.
CMatrix A_plus_matrix(int m);
CMatrix A_minus_matrix(int m);

struct VectorCsResidual {
    double plus = 0.0;
    double minus = 0.0;
    /// 10 |z|^{M+1} / sqrt((M+1)!).
    double bound = 0.0;
};

/// ||A+ eta_z - z eta_z|| and ||A- breve eta_zbar - zbar breve eta_zbar||
/// over the labels 0..M-1 where the truncated ladder is exact.
VectorCsResidual vector_cs_check(Complex z, int m);

struct ModularSpectral {
    /// max |Delta diagonal - alpha_n / alpha_l| from modular_core.
    double delta_vs_core = 0.0;
    /// max over sampled t of ||Delta^{-it/beta} X - X||.
    double kms_vector_fixed = 0.0;
    /// max over sampled t of ||flowed A+ - e^{-it} A+|| and ||flowed A- - e^{it} A-||.
    double generator_flow = 0.0;
    /// Flowed A+ stays in the algebra of {A+, A+*}: it commutes with A- and A-*.
    double algebra_preserved = 0.0;
};

/// Delta = diag(e^{-beta (n - l)}) on H_nl.
CMatrix delta_diagonal(double beta, int m);
ModularSpectral modular_spectral_check(double beta, int m);

struct DisplacementResult {
    /// Frobenius deviation on the lower half block.
    double deviation = 0.0;
    /// Deviation of the vacuum column of exp(alpha a* - conj(alpha) a) from e^{-|a|^2/2} a^n / sqrt(n!).
    double vacuum_deviation = 0.0;
    Index block = 0;
};

/// e^{|alpha|^2/2} exp(alpha a* - conj(alpha) a) against exp(alpha a*) exp(-conj(alpha) a).
/// Requires |alpha| <= 1.5 and Ncut >= 8 |alpha|^2 + 20.
DisplacementResult displacement_check(Complex alpha, Index ncut);

/// Max deviation of the reproducing identity f(wbar) = int K_M(wbar, z) f(zbar) dnu(z)
/// for f = sum_n f_n H_n0, at the points w.
double reproducing_check(const CVector& f, const std::vector<Complex>& points, const quad::ComplexGaussRule& rule);

} // namespace mtk::coherent
