#ifndef QAGM_PERIODS_HPP
#define QAGM_PERIODS_HPP

#include <array>

#include "qagm/ball.hpp"
#include "qagm/hypergeom.hpp"
#include "qagm/quadrature.hpp"
#include "qagm/scalar.hpp"

namespace qagm {

/// Branch points in the real chamber 0 < x1 < x2 < x3 < 1.
struct BranchPoints {
    Real x1, x2, x3;

    BranchPoints(Real a, Real b, Real c) : x1(a), x2(b), x3(c) {
        if (!(0.0 < x1 && x1 < x2 && x2 < x3 && x3 < 1.0))
            throw domain_error("BranchPoints: need 0 < x1 < x2 < x3 < 1");
    }
};

/// Segments of the real axis carrying the curve's integration paths, with the
/// constant phase of w on each open segment.
enum class SegmentId { L1, L2, L3, L4, L5, L6 };

inline Real segment_arg_w(SegmentId s) {
    switch (s) {
    case SegmentId::L1: return 1.25 * pi;
    case SegmentId::L2: return pi;
    case SegmentId::L3: return 0.75 * pi;
    case SegmentId::L4: return 0.5 * pi;
    case SegmentId::L5: return 0.25 * pi;
    case SegmentId::L6: return 0.0;
    }
    throw domain_error("segment_arg_w: bad segment");
}

namespace detail {

/// Positive magnitude integral over the segment: int |dz| / |prod (z-e)|^{1/4},
/// oriented by increasing z; improper segments mapped onto (0,1).
inline QuadResult segment_magnitude(SegmentId seg, const BranchPoints& x,
                                    QuadratureSpec spec) {
    const std::array<Real, 5> e = {0.0, x.x1, x.x2, x.x3, 1.0};

    auto finite_segment = [&](int left_idx) -> QuadResult {
        const Real p = e[left_idx], q = e[left_idx + 1];
        const Real len = q - p;
        spec.left_exponent = -0.25;
        spec.right_exponent = -0.25;
        auto smooth = [&](Real t) -> Cplx {
            const Real z = p + len * t;
            Real prod = 1.0;
            for (int k = 0; k < 5; ++k) {
                if (k == left_idx || k == left_idx + 1) continue;
                prod *= std::abs(z - e[k]);
            }
            return std::sqrt(len) * std::pow(prod, -0.25);
        };
        return quad_segment(smooth, spec);
    };

    switch (seg) {
    case SegmentId::L1: {
        // z = -(1-s)/s maps (0,1) to (-inf, 0) with increasing z
        spec.left_exponent = -0.75;
        spec.right_exponent = -0.25;
        auto smooth = [&](Real s) -> Cplx {
            Real prod = 1.0;
            for (Real xj : {x.x1, x.x2, x.x3}) prod *= 1.0 - (1.0 - xj) * s;
            return std::pow(prod, -0.25);
        };
        return quad_segment(smooth, spec);
    }
    case SegmentId::L2: return finite_segment(0);
    case SegmentId::L3: return finite_segment(1);
    case SegmentId::L4: return finite_segment(2);
    case SegmentId::L5: return finite_segment(3);
    case SegmentId::L6: {
        // z = 1/s maps (0,1) to (1, inf); orientation flip absorbs the sign
        spec.left_exponent = -0.75;
        spec.right_exponent = -0.25;
        auto smooth = [&](Real s) -> Cplx {
            Real prod = 1.0;
            for (Real xj : {x.x1, x.x2, x.x3}) prod *= 1.0 - xj * s;
            return std::pow(prod, -0.25);
        };
        return quad_segment(smooth, spec);
    }
    }
    throw domain_error("segment_magnitude: bad segment");
}

} // namespace detail

/// int_{L_j} dz/w with w = e^{i arg_j} |z(z-x1)(z-x2)(z-x3)(z-1)|^{1/4},
/// oriented by increasing z.
inline Cplx segment_integral(SegmentId seg, const BranchPoints& x,
                             const QuadratureSpec& spec = {}, Real* err = nullptr) {
    const auto q = detail::segment_magnitude(seg, x, spec);
    if (err) *err = q.error;
    return std::polar(1.0, -segment_arg_w(seg)) * q.value;
}

struct PeriodVector {
    Eigen::Vector4cd v;
    Real quad_error = 0.0; // max segment error indicator

    BallPoint ball() const { return BallPoint(v); }
};

namespace detail {

/// t_j = integral of dz/w over the doubled cycle built from L_j; the deck
/// transformation (z,w) -> (z,iw) scales dz/w integrals by -i, and the
/// doubling (1 - rho^2) scales them by 2.
inline std::array<Cplx, 7> cycle_integrals(const BranchPoints& x,
                                           const QuadratureSpec& spec, Real& maxerr) {
    std::array<Cplx, 7> t{};
    maxerr = 0.0;
    const SegmentId segs[6] = {SegmentId::L1, SegmentId::L2, SegmentId::L3,
                               SegmentId::L4, SegmentId::L5, SegmentId::L6};
    for (int j = 0; j < 6; ++j) {
        Real err = 0.0;
        t[j + 1] = 2.0 * segment_integral(segs[j], x, spec, &err);
        maxerr = std::max(maxerr, 2.0 * err);
    }
    return t;
}

} // namespace detail

/// The global normalization constant of the period vector, measured once by
/// comparing the raw assembled v1 with sqrt(2) pi F_D(1/4,...;x) at a fixed
/// reference chamber point. Its value is expected to be 2 (the cycle doubling).
inline Real period_calibration() {
    static const Real c = [] {
        const BranchPoints xref(0.2, 0.5, 0.8);
        QuadratureSpec spec;
        spec.node_count = 96;
        Real err = 0.0;
        const Cplx raw_v1 = 2.0 * segment_integral(SegmentId::L6, xref, spec, &err);
        const FDParams p{0.25, {0.25, 0.25, 0.25}, 1.0};
        const Cplx fd = lauricella_fd(p, {0.2, 0.5, 0.8});
        const Real cal = raw_v1.real() / (std::sqrt(2.0) * pi * fd.real());
        if (std::abs(raw_v1.imag()) > 1e-10 * std::abs(raw_v1.real()) ||
            std::abs(cal - 2.0) > 1e-6)
            throw convergence_error("period_calibration: unexpected normalization");
        return cal;
    }();
    return c;
}

/// Period vector v with v_j the integral of dz/w over the j-th cycle of the
/// symplectic basis: B1 = c6, B2 = (1-rho)c1, B3 = -(1-rho)c3 - c4, B4 = -rho c4,
/// assembled from segment integrals and divided by the calibration constant.
inline PeriodVector period_vector(const BranchPoints& x, const QuadratureSpec& spec = {}) {
    Real maxerr = 0.0;
    const auto t = detail::cycle_integrals(x, spec, maxerr);
    const Cplx i(0.0, 1.0);
    PeriodVector pv;
    pv.v(0) = t[6];
    pv.v(1) = (1.0 - i) * t[3] - 2.0 * i * t[4] - (1.0 + i) * t[5];
    pv.v(2) = -(1.0 + i) * t[3] - t[4];
    pv.v(3) = i * t[4];
    pv.v /= period_calibration();
    pv.quad_error = maxerr;
    const Real herm = (pv.v.adjoint() * u_eigen() * pv.v).value().real();
    if (!(herm < 0.0))
        throw convergence_error("period_vector: v*Uv >= 0 (branch inconsistency)");
    return pv;
}

/// Residuals of the two homology relations expressing c1 and c6 in the basis:
/// c1 = -c4 - c5 + rho c3 + rho c4 and c6 = -c2 - c3 - rho c3 - rho c4.
inline Real homology_residual(const BranchPoints& x, const QuadratureSpec& spec = {}) {
    Real maxerr = 0.0;
    const auto t = detail::cycle_integrals(x, spec, maxerr);
    const Cplx i(0.0, 1.0);
    const Real r1 = std::abs(t[1] - (-t[4] - t[5] - i * t[3] - i * t[4]));
    const Real r6 = std::abs(t[6] - (-t[2] - (1.0 - i) * t[3] + i * t[4]));
    return std::max(r1, r6);
}

/// tau(v)^# = N . tau(v).
inline SiegelPoint tau_sharp(const BallPoint& v) {
    return sp_act(mat_N(), tau_of_v(v));
}

inline SiegelPoint tau_sharp(const PeriodVector& pv) { return tau_sharp(pv.ball()); }

} // namespace qagm

#endif
