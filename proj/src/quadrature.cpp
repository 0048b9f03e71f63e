// quadrature.cpp: Gaussian quadrature on the complex plane against dnu

#include "mtk/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mtk::quad {

namespace {

// Eigen pairs of the symmetric Jacobi matrix, ascending.
Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> jacobi_eig(const Eigen::VectorXd& diag, const Eigen::VectorXd& off) {
    const Index n = diag.size();
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
    for (Index i = 0; i < n; ++i) t(i, i) = diag(i);
    for (Index i = 0; i + 1 < n; ++i) t(i, i + 1) = t(i + 1, i) = off(i);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
    if (solver.info() != Eigen::Success) throw std::runtime_error("gauss rule: Jacobi eigensolver failed");
    return solver;
}

// Orthonormal Hermite polynomials for the weight e^{-x^2}: p_n(x) and p_(n-1)(x).
void orthonormal_hermite(int n, double x, double& pn, double& pm) {
    double prev = 0.0;
    double cur = std::pow(std::numbers::pi, -0.25);
    for (int k = 0; k < n; ++k) {
        const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    pn = cur;
    pm = prev;
}

} // namespace

double laguerre(int n, double s) {
    if (n < 0) throw std::invalid_argument("laguerre: negative order");
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = 1.0 - s;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 - s) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

GaussRule gauss_laguerre(int r) {
    if (r < 1) throw std::invalid_argument("gauss_laguerre: order must be at least 1");
    Eigen::VectorXd diag(r);
    Eigen::VectorXd off(std::max(r - 1, 0));
    for (int i = 0; i < r; ++i) diag(i) = 2.0 * i + 1.0;
    for (int i = 1; i < r; ++i) off(i - 1) = i;
    const auto solver = jacobi_eig(diag, off);
    GaussRule rule;
    for (int i = 0; i < r; ++i) {
        double s = solver.eigenvalues()(i);
        // Newton polish on L_R, using L_R'(s) = R (L_R - L_{R-1}) / s.
        for (int it = 0; it < 3; ++it) {
            const double lr = laguerre(r, s);
            const double dl = r * (lr - laguerre(r - 1, s)) / s;
            if (dl == 0.0 || !std::isfinite(dl)) break;
            s -= lr / dl;
        }
        const double l_next = laguerre(r + 1, s);
        const double w = s / ((r + 1.0) * (r + 1.0) * l_next * l_next);
        rule.nodes.push_back(s);
        rule.weights.push_back(w);
    }
    return rule;
}

GaussRule gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: order must be at least 1");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd off(std::max(n - 1, 0));
    for (int i = 1; i < n; ++i) off(i - 1) = std::sqrt(i / 2.0);
    const auto solver = jacobi_eig(diag, off);
    GaussRule rule;
    for (int i = 0; i < n; ++i) {
        // Eigenvector components only carry absolute accuracy, which ruins the
        // tiny outer weights. Polish the node by Newton on the orthonormal p_n
        // and take the Christoffel weight 1 / (n p_(n-1)^2).
        double x = solver.eigenvalues()(i);
        double pn = 0.0;
        double pm = 0.0;
        for (int it = 0; it < 3; ++it) {
            orthonormal_hermite(n, x, pn, pm);
            x -= pn / (std::sqrt(2.0 * n) * pm);
        }
        orthonormal_hermite(n, x, pn, pm);
        rule.nodes.push_back(x);
        rule.weights.push_back(1.0 / (n * pm * pm));
    }
    return rule;
}

bool ComplexGaussRule::certifies(int m, int k) const {
    if (m < 0 || k < 0) return false;
    if (m == k) return m <= 2 * radial_order - 1;
    return std::abs(m - k) < angular_order && std::min(m, k) <= 2 * radial_order - 1;
}

bool ComplexGaussRule::certifies_block(int max_m, int max_k) const {
    for (int m = 0; m <= max_m; ++m)
        for (int k = 0; k <= max_k; ++k)
            if (!certifies(m, k)) return false;
    return true;
}

ComplexGaussRule build_rule(int r, int k) {
    if (r < 1) throw std::invalid_argument("build_rule: radial order must be at least 1");
    if (k < 2) throw std::invalid_argument("build_rule: angular order must be at least 2");
    const GaussRule radial = gauss_laguerre(r);
    ComplexGaussRule rule;
    rule.radial_order = r;
    rule.angular_order = k;
    for (int i = 0; i < r; ++i) {
        const double rho = std::sqrt(radial.nodes[static_cast<std::size_t>(i)]);
        for (int j = 0; j < k; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / k;
            rule.nodes.push_back(std::polar(rho, theta));
            rule.weights.push_back(radial.weights[static_cast<std::size_t>(i)] / k);
        }
    }
    return rule;
}

Complex integrate(const ComplexGaussRule& rule, const ComplexFn& f) {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const Complex v = f(rule.nodes[i]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "integrate: integrand is not finite at node " << i << " (z = " << rule.nodes[i].real() << " + "
                << rule.nodes[i].imag() << "i)";
            throw std::domain_error(msg.str());
        }
        sum += rule.weights[i] * v;
    }
    return sum;
}

double gaussian_moment(int m, int k) {
    if (m != k) return 0.0;
    return std::tgamma(m + 1.0);
}

} // namespace mtk::quad
