// quadrature.hpp: Gaussian quadrature on the complex plane against dnu = (1/pi) e^{-|z|^2} dx dy

#pragma once

#include "mtk/linalg.hpp"

#include <functional>
#include <vector>

namespace mtk::quad {

/// Nodes and weights of a one-dimensional Gauss rule.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// R-point Gauss-Laguerre rule for int_0^inf e^{-s} f(s) ds, exact to degree 2R-1.
GaussRule gauss_laguerre(int r);
/// n-point Gauss-Hermite rule for int e^{-x^2} f(x) dx, exact to degree 2n-1.
GaussRule gauss_hermite(int n);
/// L_n(s) by the three-term recurrence.
double laguerre(int n, double s);

/// Product rule z = sqrt(s_i) exp(2 pi i j / K), weight w_i / K, with node
/// index i * K + j.
struct ComplexGaussRule {
    std::vector<Complex> nodes;
    std::vector<double> weights;
    int radial_order = 0;
    int angular_order = 0;

    std::size_t size() const { return nodes.size(); }
    /// int zbar^m z^k dnu is reproduced exactly (up to rounding).
    bool certifies(int m, int k) const;
    /// Every monomial zbar^m z^k with m <= max_m, k <= max_k is certified.
    bool certifies_block(int max_m, int max_k) const;
};

/// Throws std::invalid_argument unless R >= 1 and K >= 2.
ComplexGaussRule build_rule(int r, int k);

using ComplexFn = std::function<Complex(Complex)>;

/// sum w_i f(z_i) in node order. Throws std::domain_error naming the node
/// when f is not finite there.
Complex integrate(const ComplexGaussRule& rule, const ComplexFn& f);

/// int zbar^m z^k dnu = delta_mk m!.
double gaussian_moment(int m, int k);

} // namespace mtk::quad
