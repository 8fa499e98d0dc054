#ifndef QAGM_HYPERGEOM_HPP
#define QAGM_HYPERGEOM_HPP

#include <vector>

#include "qagm/quadrature.hpp"
#include "qagm/scalar.hpp"

namespace qagm {

struct FDParams {
    Cplx alpha;
    std::vector<Cplx> betas; // size m <= 3
    Cplx gamma;
};

inline void check_gamma_param(Cplx g) {
    if (g.imag() == 0.0 && g.real() <= 0.0 && g.real() == std::floor(g.real()))
        throw domain_error("hypergeometric gamma parameter is a nonpositive integer");
}

/// Gauss hypergeometric series F(alpha, beta, gamma; z), |z| < 1.
inline Cplx gauss_2f1(Cplx alpha, Cplx beta, Cplx gamma, Cplx z) {
    check_gamma_param(gamma);
    if (std::abs(z) >= 1.0) throw domain_error("gauss_2f1: |z| >= 1");
    Cplx sum = 1.0, term = 1.0;
    int small_streak = 0;
    for (long n = 0; n < 1000000; ++n) {
        const Real dn = static_cast<Real>(n);
        term *= (alpha + dn) * (beta + dn) / ((gamma + dn) * (dn + 1.0)) * z;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            if (++small_streak >= 3) {
                require_finite(sum, "gauss_2f1");
                return sum;
            }
        } else {
            small_streak = 0;
        }
    }
    throw convergence_error("gauss_2f1: series did not converge");
}

/// Lauricella F_D series in m <= 3 variables, summed blockwise by total degree.
inline Cplx lauricella_fd(const FDParams& p, const std::vector<Cplx>& z) {
    check_gamma_param(p.gamma);
    const std::size_t m = p.betas.size();
    if (z.size() != m || m == 0 || m > 3)
        throw domain_error("lauricella_fd: need 1 to 3 variables matching betas");
    for (auto zj : z)
        if (std::abs(zj) >= 1.0) throw domain_error("lauricella_fd: |z_j| >= 1");

    // P_j[n] = (beta_j)_n z_j^n / n!; blocks S_N = (alpha)_N/(gamma)_N * sum over
    // n_1+...+n_m = N of prod P_j[n_j], built by iterated convolution.
    const std::size_t max_deg = 4000;
    std::vector<std::vector<Cplx>> P(m, std::vector<Cplx>(1, Cplx(1.0)));
    auto extend = [&](std::size_t j, std::size_t N) {
        auto& a = P[j];
        while (a.size() <= N) {
            const Real n = static_cast<Real>(a.size() - 1);
            a.push_back(a.back() * (p.betas[j] + n) * z[j] / (n + 1.0));
        }
    };
    Cplx sum = 0.0, ag = 1.0; // ag = (alpha)_N / (gamma)_N
    int small_streak = 0;
    for (std::size_t N = 0; N < max_deg; ++N) {
        for (std::size_t j = 0; j < m; ++j) extend(j, N);
        Cplx block = 0.0;
        if (m == 1) {
            block = P[0][N];
        } else if (m == 2) {
            for (std::size_t k = 0; k <= N; ++k) block += P[0][k] * P[1][N - k];
        } else {
            for (std::size_t k = 0; k <= N; ++k) {
                Cplx inner = 0.0;
                for (std::size_t l = 0; l <= N - k; ++l)
                    inner += P[1][l] * P[2][N - k - l];
                block += P[0][k] * inner;
            }
        }
        block *= ag;
        sum += block;
        const Real dn = static_cast<Real>(N);
        ag *= (p.alpha + dn) / (p.gamma + dn);
        if (N > 0 && std::abs(block) < 1e-17 * std::abs(sum)) {
            if (++small_streak >= 3) {
                require_finite(sum, "lauricella_fd");
                return sum;
            }
        } else {
            small_streak = 0;
        }
    }
    throw convergence_error("lauricella_fd: series did not converge");
}

/// Euler integral evaluation of F_D for real z_j < 1, 0 < Re(alpha) < Re(gamma).
/// With t = 1/s the representation becomes an integral over (0,1):
///   F_D = Gamma(gamma)/(Gamma(alpha)Gamma(gamma-alpha))
///         * int_0^1 s^{alpha-1} (1-s)^{gamma-alpha-1} prod_j (1-z_j s)^{-beta_j} ds.
inline Cplx lauricella_fd_euler(const FDParams& p, const std::vector<Cplx>& z,
                                QuadratureSpec spec = {}) {
    if (!(p.alpha.imag() == 0.0 && p.gamma.imag() == 0.0))
        throw domain_error("lauricella_fd_euler: alpha, gamma must be real here");
    const Real al = p.alpha.real(), ga = p.gamma.real();
    if (!(0.0 < al && al < ga))
        throw domain_error("lauricella_fd_euler: need 0 < Re(alpha) < Re(gamma)");
    const std::size_t m = p.betas.size();
    if (z.size() != m) throw domain_error("lauricella_fd_euler: size mismatch");
    std::vector<Real> zr(m);
    for (std::size_t j = 0; j < m; ++j) {
        if (z[j].imag() != 0.0 || z[j].real() >= 1.0)
            throw domain_error("lauricella_fd_euler: z_j must be real and < 1");
        zr[j] = z[j].real();
    }

    spec.left_exponent = al - 1.0;
    spec.right_exponent = ga - al - 1.0;
    auto smooth = [&](Real s) -> Cplx {
        Cplx prod = 1.0;
        for (std::size_t j = 0; j < m; ++j)
            prod *= std::pow(Cplx(1.0 - zr[j] * s), -p.betas[j]);
        return prod;
    };
    const auto q = quad_segment(smooth, spec);
    if (q.error > 1e-9 * (1.0 + std::abs(q.value)))
        throw convergence_error("lauricella_fd_euler: quadrature did not converge");
    const Real front = std::tgamma(ga) / (std::tgamma(al) * std::tgamma(ga - al));
    return front * q.value;
}

} // namespace qagm

#endif
