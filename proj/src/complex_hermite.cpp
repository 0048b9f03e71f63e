// complex_hermite.cpp: exact polynomials in (zbar, z) and complex Hermite polynomials

#include "mtk/complex_hermite.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mtk::hermite {

namespace {

void require_nonnegative(int n, int k, const char* where) {
    if (n < 0 || k < 0) throw std::invalid_argument(std::string(where) + ": negative index");
}

using Series = std::map<std::pair<int, int>, BivarPoly>;

Series series_product(const Series& a, const Series& b, int max_order) {
    Series out;
    for (const auto& [ia, pa] : a) {
        for (const auto& [ib, pb] : b) {
            const int n = ia.first + ib.first;
            const int k = ia.second + ib.second;
            if (n > max_order || k > max_order) continue;
            out[{n, k}] += pa * pb;
        }
    }
    return out;
}

} // namespace

Complex QComplex::to_complex() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
}

BivarPoly BivarPoly::constant(const QComplex& c) {
    return monomial(0, 0, c);
}

BivarPoly BivarPoly::monomial(int m, int k, const QComplex& c) {
    BivarPoly p;
    p.add_term(m, k, c);
    return p;
}

QComplex BivarPoly::coeff(int m, int k) const {
    const auto it = terms_.find({m, k});
    return it == terms_.end() ? QComplex() : it->second;
}

void BivarPoly::add_term(int m, int k, const QComplex& c) {
    if (m < 0 || k < 0) throw std::invalid_argument("BivarPoly: negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({m, k}, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int BivarPoly::degree_zbar() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.first);
    return d;
}

int BivarPoly::degree_z() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.second);
    return d;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
    for (const auto& [mono, c] : other.terms_) add_term(mono.first, mono.second, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& other) {
    for (const auto& [mono, c] : other.terms_) add_term(mono.first, mono.second, -c);
    return *this;
}

BivarPoly& BivarPoly::operator*=(const QComplex& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coef] : terms_) coef = coef * c;
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
    return out;
}

BivarPoly BivarPoly::times_zbar() const {
    BivarPoly out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(Monomial{mono.first + 1, mono.second}, c);
    return out;
}

BivarPoly BivarPoly::times_z() const {
    BivarPoly out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(Monomial{mono.first, mono.second + 1}, c);
    return out;
}

BivarPoly BivarPoly::d_zbar() const {
    BivarPoly out;
    for (const auto& [mono, c] : terms_)
        if (mono.first > 0) out.add_term(mono.first - 1, mono.second, c * QComplex(mono.first));
    return out;
}

BivarPoly BivarPoly::d_z() const {
    BivarPoly out;
    for (const auto& [mono, c] : terms_)
        if (mono.second > 0) out.add_term(mono.first, mono.second - 1, c * QComplex(mono.second));
    return out;
}

BivarPoly BivarPoly::swap_conj() const {
    BivarPoly out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(Monomial{mono.second, mono.first}, c.conj());
    return out;
}

BivarPoly BivarPoly::swap_vars() const {
    BivarPoly out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(Monomial{mono.second, mono.first}, c);
    return out;
}

std::string BivarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mono, c] = *it;
        if (!first) out << " + ";
        first = false;
        out << "(" << hermite::to_string(c.re);
        if (c.im != 0) out << (c.im > 0 ? "+" : "-") << hermite::to_string(abs(c.im)) << "i";
        out << ")";
        if (mono.first > 0) out << " zbar^" << mono.first;
        if (mono.second > 0) out << " z^" << mono.second;
    }
    return out.str();
}

BivarPoly ch_recursion(int n, int k, RecursionOrder order) {
    require_nonnegative(n, k, "ch_recursion");
    // table(i, j) = h_{i,j}
    std::vector<std::vector<BivarPoly>> h(static_cast<std::size_t>(n + 1),
                                          std::vector<BivarPoly>(static_cast<std::size_t>(k + 1)));
    h[0][0] = BivarPoly::constant(QComplex(1));
    auto raise_n = [&](int i, int j) {
        // h_{i+1,j} = zbar h_{i,j} - j h_{i,j-1}
        BivarPoly next = h[i][j].times_zbar();
        if (j > 0) next -= h[i][j - 1] * QComplex(j);
        h[i + 1][j] = std::move(next);
    };
    auto raise_k = [&](int i, int j) {
        // h_{i,j+1} = z h_{i,j} - i h_{i-1,j}
        BivarPoly next = h[i][j].times_z();
        if (i > 0) next -= h[i - 1][j] * QComplex(i);
        h[i][j + 1] = std::move(next);
    };
    if (order == RecursionOrder::k_first) {
        for (int j = 0; j < k; ++j) raise_k(0, j);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= k; ++j) raise_n(i, j);
    } else {
        for (int i = 0; i < n; ++i) raise_n(i, 0);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i <= n; ++i) raise_k(i, j);
    }
    return h[n][k];
}

BivarPoly ch_rodrigues(int n, int k) {
    require_nonnegative(n, k, "ch_rodrigues");
    BivarPoly g = BivarPoly::constant(QComplex(1));
    for (int i = 0; i < n; ++i) g = g.d_z() - g.times_zbar();
    for (int j = 0; j < k; ++j) g = g.d_zbar() - g.times_z();
    if ((n + k) % 2 != 0) g *= QComplex(-1);
    return g;
}

BivarPoly ch_explicit(int n, int k, bool printed_form) {
    require_nonnegative(n, k, "ch_explicit");
    const Integer scale = factorial(n) * factorial(k);
    BivarPoly out;
    for (int j = 0; j <= std::min(n, k); ++j) {
        Integer denom = factorial(n - j) * factorial(k - j);
        if (!printed_form) denom *= factorial(j);
        Rational c(scale, denom);
        if (!printed_form && j % 2 != 0) c = -c;
        out.add_term(n - j, k - j, QComplex(c));
    }
    return out;
}

GeneratingCheck ch_generating_check(const QComplex& v, const QComplex& u_bar, int max_order) {
    if (max_order < 0) throw std::invalid_argument("ch_generating_check: negative order");
    const Complex vd = v.to_complex();
    const Complex ud = u_bar.to_complex();
    if (std::abs(vd) > 1.0 || std::abs(ud) > 1.0) {
        throw std::invalid_argument("ch_generating_check: requires |v|, |u| <= 1");
    }
    // Formal series in (v, u_bar) with polynomial coefficients in (zbar, z).
    Series ev;
    Series eu;
    Series cross;
    for (int a = 0; a <= max_order; ++a) {
        const Rational inv(Integer(1), factorial(a));
        ev[{a, 0}] = BivarPoly::monomial(a, 0, QComplex(inv));
        eu[{0, a}] = BivarPoly::monomial(0, a, QComplex(inv));
        cross[{a, a}] = BivarPoly::constant(QComplex(a % 2 == 0 ? inv : Rational(-inv)));
    }
    const Series product = series_product(series_product(ev, eu, max_order), cross, max_order);

    GeneratingCheck out;
    for (int n = 0; n <= max_order; ++n) {
        for (int k = 0; k <= max_order; ++k) {
            const Rational inv(Integer(1), factorial(n) * factorial(k));
            const auto it = product.find({n, k});
            const BivarPoly lhs = it == product.end() ? BivarPoly() : it->second;
            if (!(lhs == ch_recursion(n, k) * QComplex(inv))) ++out.mismatches;
        }
    }
    out.coefficients_exact = out.mismatches == 0;

    const std::vector<Complex> samples{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {-0.6, 0.8}, {0.3, -0.4}, {0.5, 0.5}};
    for (const Complex z : samples) {
        Complex sum = 0.0;
        double abs_sum = 0.0;
        for (const auto& [idx, poly] : product) {
            const Complex weight = std::pow(vd, idx.first) * std::pow(ud, idx.second);
            sum += eval(poly, z) * weight;
            for (const auto& [mono, c] : poly.terms()) {
                abs_sum += std::abs(c.to_complex()) * std::pow(std::abs(z), mono.first + mono.second) *
                           std::pow(std::abs(vd), idx.first) * std::pow(std::abs(ud), idx.second);
            }
        }
        const Complex exact = std::exp(ud * z + vd * std::conj(z) - ud * vd);
        out.pointwise_residual = std::max(out.pointwise_residual, std::abs(sum - exact));
        const double total = std::exp(std::abs(z) * (std::abs(vd) + std::abs(ud)) + std::abs(vd) * std::abs(ud));
        out.truncation_bound = std::max(out.truncation_bound, std::max(0.0, total - abs_sum));
    }
    return out;
}

BivarPoly ladder_apply(Ladder which, const BivarPoly& p) {
    switch (which) {
    case Ladder::A_plus: return p.d_zbar();
    case Ladder::A_minus: return p.d_z();
    case Ladder::A_plus_dag: return p.times_zbar() - p.d_z();
    case Ladder::A_minus_dag: return p.times_z() - p.d_zbar();
    }
    throw std::logic_error("ladder_apply: unknown operator");
}

BivarPoly number_apply(Number which, const BivarPoly& p) {
    const BivarPoly laplace = p.d_zbar().d_z() * QComplex(-1);
    switch (which) {
    case Number::N_plus: return laplace + p.d_zbar().times_zbar();
    case Number::N_minus: return laplace + p.d_z().times_z();
    }
    throw std::logic_error("number_apply: unknown operator");
}

Complex NormalizedPoly::eval(Complex z) const {
    return hermite::eval(numerator, z) / std::sqrt(norm_squared.convert_to<double>());
}

NormalizedPoly H_basis(int n, int l) {
    require_nonnegative(n, l, "H_basis");
    return {ch_recursion(n, l), factorial(n) * factorial(l)};
}

UniPoly real_hermite(int n) {
    if (n < 0) throw std::invalid_argument("real_hermite: negative order");
    UniPoly g{Rational(1)};
    for (int i = 0; i < n; ++i) {
        // g -> g' - 2 x g, then the overall sign (-1)^n
        UniPoly next(g.size() + 1, Rational(0));
        for (std::size_t d = 1; d < g.size(); ++d) next[d - 1] += g[d] * static_cast<long long>(d);
        for (std::size_t d = 0; d < g.size(); ++d) next[d + 1] -= 2 * g[d];
        g = std::move(next);
    }
    if (n % 2 != 0) g = uni_scale(g, Rational(-1));
    return g;
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

UniPoly uni_scale(const UniPoly& a, const Rational& c) {
    UniPoly out = a;
    for (auto& x : out) x *= c;
    return out;
}

UniPoly uni_times_x(const UniPoly& a) {
    UniPoly out(a.size() + 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i];
    return out;
}

bool uni_equal(const UniPoly& a, const UniPoly& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Rational x = i < a.size() ? a[i] : Rational(0);
        const Rational y = i < b.size() ? b[i] : Rational(0);
        if (x != y) return false;
    }
    return true;
}

UniPoly restrict_diagonal(const BivarPoly& p) {
    UniPoly out;
    for (const auto& [mono, c] : p.terms()) {
        if (c.im != 0) throw std::invalid_argument("restrict_diagonal: coefficient is not real");
        const auto d = static_cast<std::size_t>(mono.first + mono.second);
        if (out.size() <= d) out.resize(d + 1, Rational(0));
        out[d] += c.re;
    }
    return out;
}

Complex eval(const BivarPoly& p, Complex z) {
    const Complex zb = std::conj(z);
    Complex sum = 0.0;
    for (const auto& [mono, c] : p.terms()) {
        sum += c.to_complex() * std::pow(zb, mono.first) * std::pow(z, mono.second);
    }
    return sum;
}

CMatrix H_values(int max_order, Complex z) {
    if (max_order < 0) throw std::invalid_argument("H_values: negative order");
    const Index m = max_order + 1;
    CMatrix h = CMatrix::Zero(m, m);
    h(0, 0) = 1.0;
    for (Index k = 0; k + 1 < m; ++k) h(0, k + 1) = z * h(0, k) / std::sqrt(static_cast<double>(k + 1));
    const Complex zb = std::conj(z);
    for (Index n = 0; n + 1 < m; ++n) {
        for (Index k = 0; k < m; ++k) {
            Complex next = zb * h(n, k);
            if (k > 0) next -= std::sqrt(static_cast<double>(k)) * h(n, k - 1);
            h(n + 1, k) = next / std::sqrt(static_cast<double>(n + 1));
        }
    }
    return h;
}

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::string to_string(const Rational& r) {
    return r.str();
}

} // namespace mtk::hermite
