// complex_hermite.hpp: exact polynomials in (zbar, z) and complex Hermite polynomials

#pragma once

#include "mtk/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mtk::hermite {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Exact complex rational re + i im.
struct QComplex {
    Rational re{0};
    Rational im{0};

    QComplex() = default;
    QComplex(Rational r) : re(std::move(r)) {}
    QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    QComplex(long long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }
    QComplex conj() const { return {re, -im}; }
    Complex to_complex() const;

    friend QComplex operator+(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend QComplex operator-(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
    friend QComplex operator*(const QComplex& a, const QComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const QComplex& a, const QComplex& b) { return a.re == b.re && a.im == b.im; }
};

/// Polynomial sum c(m, k) zbar^m z^k with exact coefficients; zero
/// coefficients are never stored.
class BivarPoly {
public:
    using Monomial = std::pair<int, int>;
    using Terms = std::map<Monomial, QComplex>;

    BivarPoly() = default;
    static BivarPoly constant(const QComplex& c);
    static BivarPoly monomial(int m, int k, const QComplex& c = QComplex(1));

    const Terms& terms() const { return terms_; }
    QComplex coeff(int m, int k) const;
    void add_term(int m, int k, const QComplex& c);
    bool is_zero() const { return terms_.empty(); }
    int degree_zbar() const;
    int degree_z() const;

    BivarPoly& operator+=(const BivarPoly& other);
    BivarPoly& operator-=(const BivarPoly& other);
    BivarPoly& operator*=(const QComplex& c);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(BivarPoly a, const QComplex& c) { return a *= c; }
    friend BivarPoly operator*(const QComplex& c, BivarPoly a) { return a *= c; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

    BivarPoly times_zbar() const;
    BivarPoly times_z() const;
    BivarPoly d_zbar() const;
    BivarPoly d_z() const;
    /// p(zbar, z) -> conj coefficients with the roles of zbar and z exchanged.
    BivarPoly swap_conj() const;
    /// Coefficient map transposed, coefficients untouched: p(zbar, z) -> p(z, zbar).
    BivarPoly swap_vars() const;

    std::string to_string() const;

private:
    Terms terms_;
};

enum class RecursionOrder { k_first, n_first };

/// h_{n+1,k} = zbar h_{n,k} - k h_{n,k-1} and h_{n,k+1} = z h_{n,k} - n h_{n-1,k}.
/// k_first climbs h_{0,k} = z^k before raising n; n_first does the reverse.
BivarPoly ch_recursion(int n, int k, RecursionOrder order = RecursionOrder::k_first);

/// (-1)^{n+k} e^{|z|^2} d_z^n d_zbar^k e^{-|z|^2}, via g -> d_z g - zbar g and
/// g -> d_zbar g - z g acting on g = 1.
BivarPoly ch_rodrigues(int n, int k);

/// n! k! sum_j (-1)^j zbar^{n-j} z^{k-j} / ((n-j)! (k-j)! j!). With
/// printed_form the (-1)^j and 1/j! factors are dropped.
BivarPoly ch_explicit(int n, int k, bool printed_form = false);

struct GeneratingCheck {
    /// Every (n, k) <= M Taylor coefficient of the generating function equals
    /// h_{n,k} / (n! k!).
    bool coefficients_exact = false;
    int mismatches = 0;
    /// max |truncated sum - exp(u_bar z + v zbar - u_bar v)| over sample points |z| <= 1.
    double pointwise_residual = 0.0;
    /// Remainder bound of the truncated double series at those points.
    double truncation_bound = 0.0;
};

/// Expands exp(v zbar) exp(u_bar z) exp(-u_bar v) as a formal series in
/// (v, u_bar) and compares coefficients; requires |v|, |u| <= 1.
GeneratingCheck ch_generating_check(const QComplex& v, const QComplex& u_bar, int max_order);

enum class Ladder { A_plus, A_minus, A_plus_dag, A_minus_dag };
enum class Number { N_plus, N_minus };

/// A+ = d_zbar, A- = d_z, A+* = zbar - d_z, A-* = z - d_zbar.
BivarPoly ladder_apply(Ladder which, const BivarPoly& p);
/// N+ = -d_z d_zbar + zbar d_zbar, N- = -d_z d_zbar + z d_z.
BivarPoly number_apply(Number which, const BivarPoly& p);

/// numerator / sqrt(norm_squared), with the square root kept symbolic.
struct NormalizedPoly {
    BivarPoly numerator;
    Integer norm_squared{1};

    Complex eval(Complex z) const;
};

/// H_{n,l} = h_{n,l} / sqrt(n! l!).
NormalizedPoly H_basis(int n, int l);

/// Univariate exact polynomial, coefficient of x^i at index i.
using UniPoly = std::vector<Rational>;

UniPoly real_hermite(int n);
UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(const UniPoly& a, const Rational& c);
UniPoly uni_times_x(const UniPoly& a);
bool uni_equal(const UniPoly& a, const UniPoly& b);
/// p(x, x) when every coefficient is real; throws std::invalid_argument otherwise.
UniPoly restrict_diagonal(const BivarPoly& p);

/// p(zbar, z) in double precision.
Complex eval(const BivarPoly& p, Complex z);

/// Table H(n, l) = H_{n,l}(zbar, z) for n, l <= max_order by the normalized
/// recursion, in double precision.
CMatrix H_values(int max_order, Complex z);

Integer factorial(int n);
std::string to_string(const Rational& r);

} // namespace mtk::hermite
