#ifndef QAGM_AGM_HPP
#define QAGM_AGM_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "qagm/scalar.hpp"

namespace qagm {

enum class MeanKind { Gauss2, Borchardt4, BorweinCubic2, BorweinQuartic2, KatoMatsumoto4 };

inline int mean_arity(MeanKind k) {
    switch (k) {
    case MeanKind::Gauss2:
    case MeanKind::BorweinCubic2:
    case MeanKind::BorweinQuartic2: return 2;
    default: return 4;
    }
}

inline const char* mean_name(MeanKind k) {
    switch (k) {
    case MeanKind::Gauss2: return "gauss";
    case MeanKind::Borchardt4: return "borchardt";
    case MeanKind::BorweinCubic2: return "borwein3";
    case MeanKind::BorweinQuartic2: return "borwein4";
    default: return "km";
    }
}

struct AgmState {
    std::vector<Real> terms; // 2 or 4 positive reals
};

struct AgmTrace {
    MeanKind kind;
    std::vector<AgmState> states;
    Real limit = 0.0;
    int iterations = 0;
};

inline void check_state(MeanKind kind, const AgmState& s) {
    if (static_cast<int>(s.terms.size()) != mean_arity(kind))
        throw domain_error("agm: wrong number of terms for this mean");
    for (Real t : s.terms)
        if (!(t > 0.0) || !std::isfinite(t)) throw domain_error("agm: terms must be positive");
}

inline AgmState iterate_mean(MeanKind kind, const AgmState& s) {
    check_state(kind, s);
    auto sq = [](Real r) {
        if (r < 0.0) throw domain_error("agm: negative radicand");
        return std::sqrt(r);
    };
    const auto& t = s.terms;
    switch (kind) {
    case MeanKind::Gauss2:
        return {{(t[0] + t[1]) / 2.0, sq(t[0] * t[1])}};
    case MeanKind::BorweinCubic2: {
        const Real a = t[0], b = t[1];
        return {{(a + 2.0 * b) / 3.0, std::cbrt(b * (a * a + a * b + b * b) / 3.0)}};
    }
    case MeanKind::BorweinQuartic2: {
        const Real a = t[0], b = t[1];
        return {{(a + 3.0 * b) / 4.0, sq((a + b) / 2.0 * b)}};
    }
    case MeanKind::Borchardt4: {
        const Real a = t[0], b = t[1], c = t[2], d = t[3];
        return {{(a + b + c + d) / 4.0, (sq(a * b) + sq(c * d)) / 2.0,
                 (sq(a * c) + sq(b * d)) / 2.0, (sq(a * d) + sq(b * c)) / 2.0}};
    }
    case MeanKind::KatoMatsumoto4: {
        const Real a = t[0], b = t[1], c = t[2], d = t[3];
        return {{(a + b + c + d) / 4.0, sq((a + d) * (b + c)) / 2.0,
                 sq((a + c) * (b + d)) / 2.0, sq((a + b) * (c + d)) / 2.0}};
    }
    }
    throw domain_error("agm: unknown mean kind");
}

/// Iterate to the common limit. KatoMatsumoto4 input is sorted descending
/// once up front; the convergence statement assumes a >= b >= c >= d > 0.
inline AgmTrace mean_limit(MeanKind kind, AgmState init, Real tol = 1e-15) {
    if (!(tol > 0.0)) throw domain_error("agm: tol must be positive");
    check_state(kind, init);
    if (kind == MeanKind::KatoMatsumoto4)
        std::sort(init.terms.begin(), init.terms.end(), std::greater<Real>());

    AgmTrace tr;
    tr.kind = kind;
    tr.states.push_back(init);
    for (int n = 0; n <= 64; ++n) {
        const auto& s = tr.states.back();
        const Real mx = *std::max_element(s.terms.begin(), s.terms.end());
        const Real mn = *std::min_element(s.terms.begin(), s.terms.end());
        if (mx - mn < tol * mx) {
            tr.limit = s.terms[0];
            tr.iterations = static_cast<int>(tr.states.size()) - 1;
            return tr;
        }
        tr.states.push_back(iterate_mean(kind, s));
    }
    throw convergence_error("agm: iteration cap reached without convergence");
}

} // namespace qagm

#endif
