#ifndef QAGM_THETA_HPP
#define QAGM_THETA_HPP

#include <Eigen/Dense>
#include <vector>

#include "qagm/scalar.hpp"

namespace qagm {

/// Integer characteristic (a, b); the series divides by 2 internally, so
/// (a, b) here means half characteristic (a/2, b/2). Entries may be any
/// integers; no modular reduction is applied.
struct Characteristic {
    std::vector<int> a, b;

    int dim() const { return static_cast<int>(a.size()); }
    bool operator==(const Characteristic& o) const { return a == o.a && b == o.b; }
};

inline Characteristic char4(std::initializer_list<int> a, std::initializer_list<int> b) {
    return {std::vector<int>(a), std::vector<int>(b)};
}

/// Point of the Siegel upper half-space: symmetric tau with Im(tau) > 0.
struct SiegelPoint {
    Eigen::MatrixXcd tau;
    Real lambda_min = 0.0; // smallest eigenvalue of Im(tau)

    explicit SiegelPoint(Eigen::MatrixXcd t) : tau(std::move(t)) {
        const auto n = tau.rows();
        if (n != tau.cols() || n < 1 || n > 4)
            throw domain_error("SiegelPoint: need square matrix, dimension 1..4");
        if ((tau - tau.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + tau.cwiseAbs().maxCoeff()))
            throw domain_error("SiegelPoint: tau is not symmetric");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tau.imag());
        lambda_min = es.eigenvalues()(0);
        if (!(lambda_min > 0.0))
            throw domain_error("SiegelPoint: Im(tau) is not positive definite");
    }

    int dim() const { return static_cast<int>(tau.rows()); }
};

struct ThetaAccuracy {
    Real target_eps = 1e-13;
    int max_radius = 60;
};

/// Riemann theta with characteristics:
///   sum over k in Z^n of e( (1/2)(k+a/2) tau (k+a/2)^T + (k+a/2)(zeta+b/2)^T ),
/// truncated to a ball around the Gaussian center, radius grown until two
/// successive truncations agree within target_eps.
inline Cplx riemann_theta(const Characteristic& ch, const Eigen::VectorXcd& zeta,
                          const SiegelPoint& tp, const ThetaAccuracy& acc = {}) {
    const int n = tp.dim();
    if (ch.dim() != n || static_cast<int>(ch.b.size()) != n || zeta.size() != n)
        throw domain_error("riemann_theta: dimension mismatch");
    if (!(acc.target_eps > 0.0) || acc.max_radius < 4)
        throw domain_error("riemann_theta: bad accuracy request");

    Eigen::VectorXd ah(n), bh(n);
    for (int j = 0; j < n; ++j) {
        ah(j) = 0.5 * ch.a[j];
        bh(j) = 0.5 * ch.b[j];
    }
    // The term modulus is exp(-pi (k+a/2+Y^{-1} Im zeta)^T Y (k+...)) up to a
    // k-independent factor, so truncate around center = -a/2 - Y^{-1} Im zeta.
    const Eigen::MatrixXd Y = tp.tau.imag();
    const Eigen::VectorXd center = -ah - Y.ldlt().solve(zeta.imag());

    auto sum_ball = [&](Real r) -> Cplx {
        const Real r2 = r * r;
        std::vector<int> lo(n), hi(n), k(n);
        for (int j = 0; j < n; ++j) {
            lo[j] = static_cast<int>(std::floor(center(j) - r));
            hi[j] = static_cast<int>(std::ceil(center(j) + r));
            k[j] = lo[j];
        }
        Cplx s = 0.0;
        Eigen::VectorXd q(n);
        while (true) {
            Real d2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const Real dj = k[j] - center(j);
                d2 += dj * dj;
            }
            if (d2 <= r2) {
                for (int j = 0; j < n; ++j) q(j) = k[j] + ah(j);
                const Cplx quad = 0.5 * (q.transpose() * tp.tau * q).value();
                Cplx lin = 0.0;
                for (int j = 0; j < n; ++j) lin += q(j) * (zeta(j) + bh(j));
                s += e2pi(quad + lin);
            }
            int j = 0;
            while (j < n) {
                if (++k[j] <= hi[j]) break;
                k[j] = lo[j];
                ++j;
            }
            if (j == n) break;
        }
        return s;
    };

    const Real grow = pi * zeta.imag().dot(Y.ldlt().solve(zeta.imag()));
    Real r = std::sqrt(std::max(1.0, (-std::log(acc.target_eps) + grow + 2.0) /
                                         (pi * tp.lambda_min)));
    Cplx prev = sum_ball(r);
    for (int it = 0; it < 16; ++it) {
        if (r > acc.max_radius)
            throw convergence_error("riemann_theta: truncation radius cap exceeded");
        const Cplx cur = sum_ball(r + 2.0);
        if (std::abs(cur - prev) <= acc.target_eps * (1.0 + std::abs(cur))) {
            require_finite(cur, "riemann_theta");
            return cur;
        }
        prev = cur;
        r += 2.0;
    }
    throw convergence_error("riemann_theta: truncations failed to agree");
}

inline Cplx theta_constant(const Characteristic& ch, const SiegelPoint& tp,
                           const ThetaAccuracy& acc = {}) {
    return riemann_theta(ch, Eigen::VectorXcd::Zero(tp.dim()), tp, acc);
}

/// Genus-1 theta constant with characteristic (j, k) in {0,1}^2.
inline Cplx jacobi_theta(int j, int k, Cplx tau1, const ThetaAccuracy& acc = {}) {
    if (!(tau1.imag() > 0.0)) throw domain_error("jacobi_theta: Im(tau) <= 0");
    Eigen::MatrixXcd t(1, 1);
    t(0, 0) = tau1;
    return theta_constant({{j}, {k}}, SiegelPoint(t), acc);
}

} // namespace qagm

#endif
