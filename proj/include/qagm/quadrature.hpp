#ifndef QAGM_QUADRATURE_HPP
#define QAGM_QUADRATURE_HPP

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "qagm/scalar.hpp"

namespace qagm {

enum class QuadScheme { GaussJacobi, TanhSinh };

/// Rule for integrals over (0,1) of f(t) * t^left_exponent * (1-t)^right_exponent
/// with f smooth; the endpoint weights are built into the rule.
struct QuadratureSpec {
    int node_count = 64;
    Real left_exponent = -0.25;
    Real right_exponent = -0.25;
    QuadScheme scheme = QuadScheme::GaussJacobi;
};

struct QuadResult {
    Cplx value;
    Real error; // |Q_n - Q_2n| indicator
};

namespace detail {

struct JacobiRule {
    std::vector<Real> nodes;   // t in (0,1)
    std::vector<Real> weights; // includes t^L (1-t)^R factor
};

/// Gauss-Jacobi rule on (0,1) for weight t^b (1-t)^a, by Golub-Welsch on the
/// standard (1-x)^a (1+x)^b weight over (-1,1) with t = (x+1)/2.
inline JacobiRule gauss_jacobi_rule(int n, Real b_left, Real a_right) {
    static std::map<std::tuple<int, Real, Real>, JacobiRule> cache;
    static std::mutex mtx;
    {
        std::lock_guard lk(mtx);
        auto it = cache.find({n, b_left, a_right});
        if (it != cache.end()) return it->second;
    }

    const Real a = a_right, b = b_left;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        Real alpha_k;
        if (k == 0)
            alpha_k = (b - a) / (a + b + 2.0);
        else {
            const Real s = 2.0 * k + a + b;
            alpha_k = (b * b - a * a) / (s * (s + 2.0));
        }
        J(k, k) = alpha_k;
        if (k > 0) {
            const Real s = 2.0 * k + a + b;
            // k = 1 needs the (k+a+b)/(s-1) factor cancelled analytically,
            // otherwise a+b = -1 gives 0/0.
            const Real beta_k =
                k == 1 ? 4.0 * (1.0 + a) * (1.0 + b) / (s * s * (s + 1.0))
                       : 4.0 * k * (k + a) * (k + b) * (k + a + b) /
                             (s * s * (s + 1.0) * (s - 1.0));
            const Real off = std::sqrt(beta_k);
            J(k, k - 1) = off;
            J(k - 1, k) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success)
        throw convergence_error("Gauss-Jacobi eigen decomposition failed");

    const Real mu0 =
        std::pow(2.0, a + b + 1.0) * std::beta(a + 1.0, b + 1.0);

    // With t = (x+1)/2:
    //   \int_0^1 t^b (1-t)^a g(t) dt
    //     = 2^{-(a+b+1)} \int_{-1}^1 (1-x)^a (1+x)^b g((x+1)/2) dx.
    JacobiRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const Real scale = std::pow(2.0, -(a + b + 1.0));
    for (int j = 0; j < n; ++j) {
        rule.nodes[j] = 0.5 * (es.eigenvalues()(j) + 1.0);
        const Real w0 = mu0 * es.eigenvectors()(0, j) * es.eigenvectors()(0, j);
        rule.weights[j] = w0 * scale;
    }

    std::lock_guard lk(mtx);
    auto [it, ok] = cache.emplace(std::make_tuple(n, b_left, a_right), std::move(rule));
    return it->second;
}

/// tanh-sinh quadrature of smooth(t) * t^L (1-t)^R over (0,1), with the
/// endpoint powers applied explicitly; robust for integrable singularities.
inline QuadResult tanh_sinh(const std::function<Cplx(Real)>& smooth, Real L, Real R,
                            int levels = 11) {
    // Evaluate the full weighted integrand at abscissa u; t and 1-t are formed
    // without cancellation so the endpoint powers stay accurate near 0 and 1.
    auto sample = [&](Real u) -> Cplx {
        const Real s = 0.5 * pi * std::sinh(u);
        const Real t = 1.0 / (1.0 + std::exp(-2.0 * s));
        const Real omt = 1.0 / (1.0 + std::exp(2.0 * s));
        const Real c = std::cosh(s);
        const Real w = 0.25 * pi * std::cosh(u) / (c * c);
        if (w < 1e-300 || t <= 0.0 || omt <= 0.0) return 0.0;
        return smooth(t) * std::pow(t, L) * std::pow(omt, R) * w;
    };
    const Real umax = 6.0;
    Real h = 1.0;
    Cplx total = sample(0.0);
    for (Real u = 1.0; u <= umax; u += 1.0) total += sample(u) + sample(-u);
    Cplx prev = total * h, cur = prev;
    for (int lev = 1; lev <= levels; ++lev) {
        h *= 0.5;
        for (Real u = h; u <= umax; u += 2.0 * h) total += sample(u) + sample(-u);
        cur = total * h;
        if (lev >= 4 && std::abs(cur - prev) < 1e-15 * (1.0 + std::abs(cur)))
            return {cur, std::abs(cur - prev)};
        prev = cur;
    }
    return {cur, std::abs(cur - prev)};
}

} // namespace detail

/// Integral over (0,1) of smooth(t) * t^left_exponent * (1-t)^right_exponent.
/// Returns the finer (2n-node) estimate and |Q_n - Q_2n| as error indicator.
inline QuadResult quad_segment(const std::function<Cplx(Real)>& smooth,
                               const QuadratureSpec& spec) {
    if (spec.node_count < 4) throw domain_error("quad_segment: node_count < 4");
    if (spec.left_exponent <= -1.0 || spec.right_exponent <= -1.0)
        throw domain_error("quad_segment: exponent <= -1 is not integrable");
    if (spec.scheme == QuadScheme::TanhSinh)
        return detail::tanh_sinh(smooth, spec.left_exponent, spec.right_exponent);

    auto apply = [&](int n) -> Cplx {
        const auto rule =
            detail::gauss_jacobi_rule(n, spec.left_exponent, spec.right_exponent);
        Cplx s = 0.0;
        for (int j = 0; j < n; ++j) s += rule.weights[j] * smooth(rule.nodes[j]);
        return s;
    };
    const Cplx q1 = apply(spec.node_count);
    const Cplx q2 = apply(2 * spec.node_count);
    return {q2, std::abs(q2 - q1)};
}

} // namespace qagm

#endif
