#ifndef QAGM_SCALAR_HPP
#define QAGM_SCALAR_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qagm {

using Real = double;
using Cplx = std::complex<double>;

inline constexpr Real pi = std::numbers::pi_v<Real>;

/// Thrown when an input violates a documented precondition.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an iterative computation fails to reach its tolerance.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// e(t) = exp(2*pi*i*t), the character used throughout the theta series.
inline Cplx e2pi(Cplx t) { return std::exp(Cplx(0.0, 2.0 * pi) * t); }
inline Cplx e2pi(Real t) { return std::polar(1.0, 2.0 * pi * t); }

inline bool finite(Cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require_finite(Cplx z, const char* what) {
    if (!finite(z)) throw domain_error(std::string("non-finite value in ") + what);
}

/// Rising factorial (alpha)_n = alpha (alpha+1) ... (alpha+n-1); empty product for n = 0.
inline Cplx pochhammer(Cplx alpha, unsigned n) {
    Cplx p = 1.0;
    for (unsigned k = 0; k < n; ++k) p *= alpha + Cplx(static_cast<Real>(k), 0.0);
    require_finite(p, "pochhammer");
    return p;
}

/// Gamma(3/4), self-checked against Gamma(1/4) Gamma(3/4) = sqrt(2) pi.
inline Real gamma34() {
    static const Real g = [] {
        const Real g34 = std::tgamma(0.75);
        const Real g14 = std::tgamma(0.25);
        const Real rel = std::abs(g14 * g34 - std::sqrt(2.0) * pi) / (std::sqrt(2.0) * pi);
        if (rel > 1e-14) throw convergence_error("Gamma(3/4) reflection self-check failed");
        return g34;
    }();
    return g;
}

} // namespace qagm

#endif
