#ifndef QAGM_IDENTITIES_HPP
#define QAGM_IDENTITIES_HPP

#include <array>

#include "qagm/agm.hpp"
#include "qagm/ball.hpp"
#include "qagm/hypergeom.hpp"
#include "qagm/periods.hpp"
#include "qagm/report.hpp"
#include "qagm/theta.hpp"

namespace qagm {

/// kappa = 1 / ((4 pi)^2 Gamma(3/4)^8) = theta_00(i)^8 / (16 pi^4).
inline Real kappa() {
    const Real g = gamma34();
    return 1.0 / (16.0 * pi * pi * std::pow(g, 8.0));
}

/// theta_00(i)^4 = pi / Gamma(3/4)^4, the common limit value of the means.
inline Real theta00i_pow4() { return pi / std::pow(gamma34(), 4.0); }

// ---------------------------------------------------------------------------
// Inverse period map and Thomae-type identities on the ball.
// ---------------------------------------------------------------------------

inline std::array<Cplx, 12> theta_nu_all(const BallPoint& v, const ThetaAccuracy& acc = {}) {
    const SiegelPoint tp = tau_of_v(v);
    std::array<Cplx, 12> t;
    for (int j = 0; j < 12; ++j) t[j] = theta_constant(nu_char(j), tp, acc);
    return t;
}

/// x_j = 4 th_{4j-4}^2 th_{4j-3}^2 / (th_{4j-4}^2 + th_{4j-3}^2)^2 for j = 1,2,3.
inline std::array<Cplx, 3> x_of_v(const BallPoint& v, const ThetaAccuracy& acc = {}) {
    const auto t = theta_nu_all(v, acc);
    std::array<Cplx, 3> x;
    for (int j = 0; j < 3; ++j) {
        const Cplx p = t[4 * j] * t[4 * j], q = t[4 * j + 1] * t[4 * j + 1];
        const Cplx s = p + q;
        if (std::abs(s) < 1e-300) throw domain_error("x_of_v: vanishing denominator");
        x[j] = 4.0 * p * q / (s * s);
    }
    return x;
}

/// Squared-theta sums against kappa (v^T U v)^2 and the branch point factors.
inline ResidualReport verify_thomae(const BallPoint& v, Real tol = 1e-8,
                                    const ThetaAccuracy& acc = {}) {
    const auto t = theta_nu_all(v, acc);
    const auto x = x_of_v(v, acc);
    const Cplx q = v.bilin_form();
    const Real k = kappa();
    const Cplx kq2 = k * q * q;
    auto sum2 = [&](int i, int j) {
        const Cplx s = t[i] * t[i] + t[j] * t[j];
        return s * s;
    };
    ResidualReport rep{"thomae", {}};
    auto add = [&](std::string id, Cplx lhs, Cplx rhs) {
        rep.add(std::move(id), lhs, rhs, tol * (1.0 + std::abs(rhs)));
    };
    add("(th0^2+th1^2)^2", sum2(0, 1), kq2);
    add("(th2^2+th3^2)^2", sum2(2, 3), (1.0 - x[2]) * kq2);
    add("(th4^2+th5^2)^2", sum2(4, 5), 0.25 * kq2);
    add("(th6^2+th7^2)^2", sum2(6, 7), 0.25 * (1.0 - x[0]) * kq2);
    add("(th8^2+th9^2)^2", sum2(8, 9), 0.25 * kq2);
    add("(th10^2+th11^2)^2", sum2(10, 11), 0.25 * (1.0 - x[0]) * kq2);
    return rep;
}

/// The fifteen quartic theta identities against P_{n1,n2;n3,n4} and
/// Xi = kappa^2 (v^T U v)^4, with x-tilde = (0, x1, x2, x3, 1).
inline ResidualReport verify_table_quartic(const BallPoint& v, Real tol = 1e-7,
                                           const ThetaAccuracy& acc = {}) {
    const auto t = theta_nu_all(v, acc);
    const auto x = x_of_v(v, acc);
    const Cplx q = v.bilin_form();
    const Cplx xi = kappa() * kappa() * q * q * q * q;
    const std::array<Cplx, 5> xt = {0.0, x[0], x[1], x[2], 1.0};
    auto P = [&](int n1, int n2, int n3, int n4) {
        return (xt[n2] - xt[n1]) * (xt[n4] - xt[n3]);
    };
    auto s2 = [&](int j) { return t[j] * t[j]; };

    ResidualReport rep{"table_quartic", {}};
    auto add = [&](std::string id, Cplx lhs, Cplx rhs) {
        rep.add(std::move(id), lhs, rhs, tol * (1.0 + std::abs(rhs)));
    };
    auto sq = [](Cplx z) { return z * z; };

    add("-16 th0..th3", -16.0 * s2(0) * s2(1) * s2(2) * s2(3), P(0, 1, 2, 3) * xi);
    add("-4(th0^2+th1^2)^2 th2 th3", -4.0 * sq(s2(0) + s2(1)) * s2(2) * s2(3),
        P(0, 4, 2, 3) * xi);
    add("4 th0 th1 (th2^2+th3^2)^2", 4.0 * s2(0) * s2(1) * sq(s2(2) + s2(3)),
        P(0, 1, 3, 4) * xi);
    add("-4(th0^2-th1^2)^2 th2 th3", -4.0 * sq(s2(0) - s2(1)) * s2(2) * s2(3),
        P(1, 4, 2, 3) * xi);
    add("4 th0 th1 (th2^2-th3^2)^2", 4.0 * s2(0) * s2(1) * sq(s2(2) - s2(3)),
        P(0, 1, 2, 4) * xi);
    add("256 th4..th7", 256.0 * s2(4) * s2(5) * s2(6) * s2(7), P(0, 2, 1, 3) * xi);
    add("64(th4^2+th5^2)^2 th6 th7", 64.0 * sq(s2(4) + s2(5)) * s2(6) * s2(7),
        P(0, 4, 1, 3) * xi);
    add("64 th4 th5 (th6^2+th7^2)^2", 64.0 * s2(4) * s2(5) * sq(s2(6) + s2(7)),
        P(0, 2, 1, 4) * xi);
    add("64(th4^2-th5^2)^2 th6 th7", 64.0 * sq(s2(4) - s2(5)) * s2(6) * s2(7),
        P(2, 4, 1, 3) * xi);
    add("64 th4 th5 (th6^2-th7^2)^2", 64.0 * s2(4) * s2(5) * sq(s2(6) - s2(7)),
        P(0, 2, 3, 4) * xi);
    add("256 th8..th11", 256.0 * s2(8) * s2(9) * s2(10) * s2(11), P(0, 3, 1, 2) * xi);
    add("64(th8^2+th9^2)^2 th10 th11", 64.0 * sq(s2(8) + s2(9)) * s2(10) * s2(11),
        P(0, 4, 1, 2) * xi);
    add("64 th8 th9 (th10^2+th11^2)^2", 64.0 * s2(8) * s2(9) * sq(s2(10) + s2(11)),
        P(0, 3, 1, 4) * xi);
    add("64(th8^2-th9^2)^2 th10 th11", 64.0 * sq(s2(8) - s2(9)) * s2(10) * s2(11),
        P(3, 4, 1, 2) * xi);
    add("64 th8 th9 (th10^2-th11^2)^2", 64.0 * s2(8) * s2(9) * sq(s2(10) - s2(11)),
        P(0, 3, 2, 4) * xi);
    return rep;
}

/// Linear relations between the squared theta constants.
inline ResidualReport verify_theta_sum_chains(const BallPoint& v, Real tol = 1e-8,
                                              const ThetaAccuracy& acc = {}) {
    const auto t = theta_nu_all(v, acc);
    auto s2 = [&](int j) { return t[j] * t[j]; };
    ResidualReport rep{"theta_sum_chains", {}};
    auto add = [&](std::string id, Cplx lhs, Cplx rhs) {
        rep.add(std::move(id), lhs, rhs, tol * (1.0 + std::abs(rhs)));
    };
    add("(0+1)/2 = 4+5", 0.5 * (s2(0) + s2(1)), s2(4) + s2(5));
    add("(0+1)/2 = 8+9", 0.5 * (s2(0) + s2(1)), s2(8) + s2(9));
    add("(0+2)/2 = 4+6", 0.5 * (s2(0) + s2(2)), s2(4) + s2(6));
    add("(0+2)/2 = 8+10", 0.5 * (s2(0) + s2(2)), s2(8) + s2(10));
    add("(0+3)/2 = 5+6", 0.5 * (s2(0) + s2(3)), s2(5) + s2(6));
    add("(0+3)/2 = 8+11", 0.5 * (s2(0) + s2(3)), s2(8) + s2(11));
    add("(1+2)/2 = 4-7", 0.5 * (s2(1) + s2(2)), s2(4) - s2(7));
    add("(1+2)/2 = 8-11", 0.5 * (s2(1) + s2(2)), s2(8) - s2(11));
    const Real k4 = 0.25 * kappa();
    const Cplx q = v.bilin_form();
    add("((0+1)/2)^2 = kq^2/4", 0.25 * (s2(0) + s2(1)) * (s2(0) + s2(1)), k4 * q * q);
    return rep;
}

/// th0(v)^2 + th1(v)^2 = -(1/(4 pi Gamma(3/4)^4)) v^T U v.
inline ResidualReport verify_jacobi(const BallPoint& v, Real tol = 1e-8,
                                    const ThetaAccuracy& acc = {}) {
    const SiegelPoint tp = tau_of_v(v);
    const Cplx t0 = theta_constant(nu_char(0), tp, acc);
    const Cplx t1 = theta_constant(nu_char(1), tp, acc);
    const Cplx lhs = t0 * t0 + t1 * t1;
    const Cplx rhs = -v.bilin_form() / (4.0 * pi * std::pow(gamma34(), 4.0));
    ResidualReport rep{"jacobi", {}};
    rep.add("th0^2+th1^2", lhs, rhs, tol * (1.0 + std::abs(rhs)));
    return rep;
}

// ---------------------------------------------------------------------------
// The four means read off theta constants at tau^# = N . tau(v).
// ---------------------------------------------------------------------------

struct ThetaMeans {
    Cplx a, b1, b2, b3;
};

inline ThetaMeans means_at_sharp(const SiegelPoint& ts, const ThetaAccuracy& acc = {}) {
    const Cplx t1 = theta_constant(char4({0, 0, 0, 0}, {0, 0, 0, 0}), ts, acc);
    const Cplx t2 = theta_constant(char4({1, 1, 0, 0}, {0, 0, 0, 0}), ts, acc);
    const Cplx t3 = theta_constant(char4({0, 0, 0, 0}, {1, 1, 0, 0}), ts, acc);
    const Cplx t4 = theta_constant(char4({1, 1, 1, 1}, {1, 1, 1, 1}), ts, acc);
    return {t1 * t1 + t2 * t2, t1 * t1 - t2 * t2, t3 * t3 + t4 * t4, t3 * t3 - t4 * t4};
}

inline ThetaMeans means_of_v(const BallPoint& v, const ThetaAccuracy& acc = {}) {
    return means_at_sharp(tau_sharp(v), acc);
}

/// E_R(v) = ((1-i)/2) tau_11^{1/2} tau^{(1)}_11^{1/2} chi(jmath(g13), tau(R1 v))^{1/2}
/// with tau = tau(v) and tau^{(1)} the lifted Sp(4) image of tau(g13 v).
inline Cplx e_r_factor(const BallPoint& v) {
    const SiegelPoint tau = tau_of_v(v);
    const GaussMat<8> lift = natural_lift(mat_B2() * mat_M1() * mat_B1());
    const SiegelPoint tau1 = sp_act(lift, tau);
    const Cplx c13 = chi(jmath(mat_g13()), tau_of_v(apply(mat_R1(), v)));
    return 0.5 * Cplx(1.0, -1.0) * std::sqrt(tau.tau(0, 0)) * std::sqrt(tau1.tau(0, 0)) *
           std::sqrt(c13);
}

/// The mean-generating transformation: means at R v against the quaternary
/// AGM step of the means at v; squared identities hold on the whole ball, the
/// positive-root forms on the chamber component. Includes the E_R factor
/// identity and the six individual theta relations under R.
inline ResidualReport verify_mean_transform(const BallPoint& v, bool chamber_roots,
                                            Real tol = 1e-8, const ThetaAccuracy& acc = {}) {
    const ThetaMeans m = means_of_v(v, acc);
    const BallPoint rv = apply(mat_R(), v);
    const ThetaMeans mr = means_of_v(rv, acc);

    ResidualReport rep{"mean_transform", {}};
    auto add = [&](std::string id, Cplx lhs, Cplx rhs) {
        rep.add(std::move(id), lhs, rhs, tol * (1.0 + std::abs(rhs)));
    };
    const Cplx s = 0.25 * (m.a + m.b1 + m.b2 + m.b3);
    add("a(Rv)^2", mr.a * mr.a, s * s);
    add("b1(Rv)^2", mr.b1 * mr.b1, 0.25 * (m.a + m.b3) * (m.b1 + m.b2));
    add("b2(Rv)^2", mr.b2 * mr.b2, 0.25 * (m.a + m.b2) * (m.b1 + m.b3));
    add("b3(Rv)^2", mr.b3 * mr.b3, 0.25 * (m.a + m.b1) * (m.b2 + m.b3));
    if (chamber_roots) {
        add("a(Rv)", mr.a, s);
        add("b1(Rv)", mr.b1, 0.5 * std::sqrt((m.a + m.b3) * (m.b1 + m.b2)));
        add("b2(Rv)", mr.b2, 0.5 * std::sqrt((m.a + m.b2) * (m.b1 + m.b3)));
        add("b3(Rv)", mr.b3, 0.5 * std::sqrt((m.a + m.b1) * (m.b2 + m.b3)));
    }

    const Cplx er = e_r_factor(v);
    add("8 E_R^2 chi(N, tau(Rv))", 8.0 * er * er * chi(mat_N(), tau_of_v(rv)),
        chi(mat_N(), tau_of_v(v)));

    const auto t = theta_nu_all(v, acc);
    const SiegelPoint taur = tau_of_v(rv);
    auto tr = [&](int j) { return theta_constant(nu_char(j), taur, acc); };
    add("th0(Rv)", tr(0), 2.0 * er * (t[8] + t[10]));
    add("th1(Rv)", tr(1), 2.0 * er * (t[8] - t[10]));
    add("th4(Rv)", tr(4), std::sqrt(2.0) * er * (t[4] + t[6]));
    add("th5(Rv)", tr(5), std::sqrt(2.0) * er * (t[4] - t[6]));
    add("th8(Rv)", tr(8), er * (t[0] + t[2]));
    add("th9(Rv)", tr(9), er * (t[0] - t[2]));
    return rep;
}

// ---------------------------------------------------------------------------
// Theta transformation behaviour under the symplectic group.
// ---------------------------------------------------------------------------

/// Ratio theta_{M.(a,b)}(M.tau) / (e(phi_{a,b}(M)) chi(M,tau)^{1/2} theta_{a,b}(tau))
/// with the principal square root; an eighth root of unity up to the branch sign.
inline Cplx automorphy_ratio(const GaussMat<8>& M, const Characteristic& ch,
                             const SiegelPoint& tp, const ThetaAccuracy& acc = {}) {
    const Characteristic ch2 = char_act(M, ch);
    const Cplx th1 = theta_constant(ch, tp, acc);
    if (std::abs(th1) < 1e-8)
        throw domain_error("automorphy_ratio: theta_{a,b}(tau) too small");
    const Cplx th2 = theta_constant(ch2, sp_act(M, tp), acc);
    const Cplx phase = e2pi(phi_ab(M, ch).to_complex().real());
    return th2 / (phase * std::sqrt(chi(M, tp)) * th1);
}

inline Characteristic char_shift(Characteristic ch, std::initializer_list<int> da,
                                 std::initializer_list<int> db) {
    int j = 0;
    for (int d : da) ch.a[j++] += d;
    j = 0;
    for (int d : db) ch.b[j++] += d;
    return ch;
}

namespace detail {
inline Real char_entry(const Characteristic& ch, bool b, int idx1) {
    return static_cast<Real>((b ? ch.b : ch.a)[idx1 - 1]);
}
} // namespace detail

/// The explicit transformation formulas for the named group elements,
/// evaluated at tau = tau(v) for characteristics drawn from the nu-table.
inline ResidualReport verify_theta_transformations(const BallPoint& v, Real tol = 1e-9,
                                                   const ThetaAccuracy& acc = {}) {
    const SiegelPoint tp = tau_of_v(v);
    ResidualReport rep{"theta_transformations", {}};
    auto add = [&](std::string id, Cplx lhs, Cplx rhs) {
        rep.add(std::move(id), lhs, rhs, tol * (1.0 + std::abs(rhs)));
    };
    auto th = [&](const Characteristic& ch, const SiegelPoint& t) {
        return theta_constant(ch, t, acc);
    };
    const Cplx i(0.0, 1.0);
    const Real rs2 = 1.0 / std::sqrt(2.0);

    // sample characteristics with nonzero theta on the ball locus
    const std::array<int, 5> sample = {0, 1, 4, 7, 11};

    // (1),(2): jmath(g23) and its inverse
    {
        const GaussMat<8> M = jmath(mat_g23());
        const GaussMat<8> Mi = symplectic_inverse(M);
        const SiegelPoint Mt = sp_act(M, tp), Mit = sp_act(Mi, tp);
        for (int j : sample) {
            const Characteristic ch = nu_char(j);
            const Real a4 = ch.a[3], b4 = ch.b[3];
            const Cplx ph = e2pi(-a4 * b4 / 4.0);
            add("g23 nu" + std::to_string(j), th(char_act(M, ch), Mt),
                (1.0 + i) * rs2 * ph * std::sqrt(-tp.tau(3, 3)) * th(ch, tp));
            add("g23inv nu" + std::to_string(j), th(char_act(Mi, ch), Mit),
                (1.0 - i) * rs2 * ph * std::sqrt(tp.tau(3, 3)) * th(ch, tp));
        }
    }

    // (3): [[O,-I],[I,O]]: theta_{b,a}(-tau^{-1}) = det(tau)^{1/2} e(ab^T/4) theta_{a,b}
    {
        const SiegelPoint mt = sp_act(mat_Jswap(), tp);
        const Cplx rdet = std::sqrt(tp.tau.determinant());
        for (int j : sample) {
            const Characteristic ch = nu_char(j);
            Real ab = 0.0;
            for (int k = 0; k < 4; ++k) ab += ch.a[k] * ch.b[k];
            const Characteristic sw{ch.b, ch.a};
            add("swap nu" + std::to_string(j), th(sw, mt),
                rdet * e2pi(ab / 4.0) * th(ch, tp));
            // ball form: e(ab^T/4) theta_{a,b}(v) = theta_{bU,aU}(v)
            Characteristic bu{ch.b, ch.a};
            std::swap(bu.a[0], bu.a[1]);
            std::swap(bu.b[0], bu.b[1]);
            add("swapU nu" + std::to_string(j), e2pi(ab / 4.0) * th(ch, tp), th(bu, tp));
        }
    }

    // (4),(5): jmath(g01) and its inverse, principal sqrt (Re > 0)
    {
        const GaussMat<8> M = jmath(mat_g01());
        const GaussMat<8> Mi = symplectic_inverse(M);
        const SiegelPoint Mt = sp_act(M, tp), Mit = sp_act(Mi, tp);
        for (int j : sample) {
            const Characteristic ch = nu_char(j);
            add("g01 nu" + std::to_string(j), th(char_act(M, ch), Mt),
                (1.0 + i) * rs2 * e2pi(phi_ab(M, ch).to_complex().real()) *
                    std::sqrt(chi(M, tp)) * th(ch, tp));
            add("g01inv nu" + std::to_string(j), th(char_act(Mi, ch), Mit),
                (1.0 - i) * rs2 * e2pi(phi_ab(Mi, ch).to_complex().real()) *
                    std::sqrt(chi(Mi, tp)) * th(ch, tp));
        }
    }

    // (6): unipotent [[I,I],[O,I]] and [[I,U],[O,I]]: factor e(phi) only
    {
        GaussMat<8> Ma = GaussMat<8>::identity(), Mb = GaussMat<8>::identity();
        for (int k = 0; k < 4; ++k) Ma(k, k + 4) = DyadicGaussian(1);
        const auto u = u_mat();
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) Mb(r, c + 4) = u(r, c);
        for (const auto* pm : {&Ma, &Mb}) {
            const SiegelPoint Mt = sp_act(*pm, tp);
            for (int j : {0, 4, 11}) {
                const Characteristic ch = nu_char(j);
                add(std::string(pm == &Ma ? "shiftI nu" : "shiftU nu") + std::to_string(j),
                    th(char_act(*pm, ch), Mt),
                    e2pi(phi_ab(*pm, ch).to_complex().real()) * th(ch, tp));
            }
        }
    }

    // g13 pair formula with (c,d) = jmath(g13)^{-1} . (a,b)
    {
        const GaussMat<8> M = jmath(mat_g13());
        const BallPoint gv = apply(mat_g13(), v);
        const SiegelPoint tg = tau_of_v(gv);
        const Cplx pref0 = std::sqrt(chi(M, tp)) * 0.5 * (1.0 + i);
        for (int j : sample) {
            const Characteristic ch = nu_char(j);
            CharVec cd;
            try {
                cd = char_act(symplectic_inverse(M), char_vec(ch));
                for (const auto& z : cd)
                    if (!z.is_integer()) throw domain_error("skip");
            } catch (const domain_error&) {
                continue;
            }
            const Characteristic c_d = char_of_vec(cd);
            const Real a3 = ch.a[2], a4 = ch.a[3], b3 = ch.b[2], b4 = ch.b[3];
            const Cplx pref = pref0 * e2pi((a4 - a3) * (b4 - b3) / 8.0);
            const Cplx tA = th(char_shift(c_d, {0, 0, 0, 0}, {0, 0, 1, 1}), tp);
            const Cplx tB = th(char_shift(c_d, {0, 0, 1, 1}, {0, 0, 0, 0}), tp);
            add("g13pair0 nu" + std::to_string(j), th(ch, tg),
                pref * (e2pi(-(a3 + a4) / 4.0) * tA + tB));
            add("g13pair1 nu" + std::to_string(j),
                th(char_shift(ch, {0, 0, 1, 1}, {0, 0, 1, 1}), tg),
                pref * (tA - e2pi((a3 + a4) / 4.0) * tB));
        }
    }

    // g12 formula with (c,d) = (a,b) jmath(g12) (plain row product)
    {
        const GaussMat<8> M = jmath(mat_g12());
        const BallPoint gv = apply(mat_g12(), v);
        const SiegelPoint tg = tau_of_v(gv);
        const Cplx rchi = std::sqrt(chi(M, tp));
        for (int j : sample) {
            const Characteristic ch = nu_char(j);
            const CharVec cd = row_times_mat(char_vec(ch), M);
            bool ok = true;
            for (const auto& z : cd) ok = ok && z.is_integer();
            if (!ok) continue;
            const Characteristic c_d = char_of_vec(cd);
            const Real a3 = ch.a[2], a4 = ch.a[3], b3 = ch.b[2], b4 = ch.b[3];
            const Cplx E1 = e2pi((a4 - b4) / 8.0);
            const Cplx E = 0.5 * (1.0 + i) * e2pi((-a3 + b3) / 8.0) *
                           e2pi((a3 - b4) * (a4 + b3) / 8.0) * e2pi(a4 * b4 / 4.0) *
                           e2pi(-(a3 + a4 - b3 - b4) * (a3 + a4 + b3 + b4) / 8.0) *
                           e2pi((a3 * a4 - b3 * b4) / 4.0);
            const Cplx tA = th(char_shift(c_d, {0, 0, 0, 1}, {0, 0, 1, 0}), tp);
            const Cplx tB = th(char_shift(c_d, {0, 0, 1, 0}, {0, 0, 0, 1}), tp);
            add("g12 nu" + std::to_string(j), th(ch, tg),
                rchi * E * (E1 * tA + tB / E1));
        }
    }

    // the four nu-indexed actions of g12 and g13, and the sign relation
    {
        const GaussMat<8> M12 = jmath(mat_g12());
        const GaussMat<8> M13 = jmath(mat_g13());
        const SiegelPoint t12 = tau_of_v(apply(mat_g12(), v));
        const SiegelPoint t13 = tau_of_v(apply(mat_g13(), v));
        const Cplx c12 = std::sqrt(chi(M12, tp)), c13 = std::sqrt(chi(M13, tp));
        for (int j = 0; j < 4; ++j) {
            const Characteristic ch = nu_char(j);
            const Cplx Ej = (j == 3) ? Cplx(0.0, 1.0) : Cplx(1.0);
            add("cor g12 nu" + std::to_string(j), th(ch, t12),
                c12 * (1.0 + i) * Ej * th(char_shift(ch, {0, 0, 1, 0}, {0, 0, 0, 1}), tp));
            add("cor g13 nu" + std::to_string(j), th(ch, t13),
                c13 * (1.0 + i) * th(char_shift(ch, {0, 0, 1, 1}, {0, 0, 0, 0}), tp));
        }
        add("sign relation", th(char4({1, 1, 2, 1}, {1, 1, 1, 2}), tp),
            -th(char4({1, 1, 0, 1}, {1, 1, 1, 0}), tp));
    }

    // N action: theta_{N.(a,b)}(N.tau) = ((1-i)/sqrt2) tau_22^{1/2} e(phi) theta_{a,b}
    {
        const GaussMat<8> M = mat_N();
        const SiegelPoint Mt = sp_act(M, tp);
        const Cplx r22 = std::sqrt(tp.tau(1, 1)); // Re > 0 since arg in (0, pi)
        for (int j : sample) {
            const Characteristic ch = nu_char(j);
            add("N nu" + std::to_string(j), th(char_act(M, ch), Mt),
                (1.0 - i) * rs2 * r22 * e2pi(phi_ab(M, ch).to_complex().real()) *
                    th(ch, tp));
        }
    }
    return rep;
}

/// kappa(M)^8 = 1 for the generators, extracted as an automorphy ratio;
/// also checks independence of the characteristic.
inline ResidualReport verify_automorphy_roots(const BallPoint& v, Real tol = 1e-9,
                                              const ThetaAccuracy& acc = {}) {
    const SiegelPoint tp = tau_of_v(v);
    ResidualReport rep{"automorphy_roots", {}};
    // only integral symplectic matrices here: the eighth-root-of-unity
    // statement does not apply to the dyadic ones like jmath(g12), jmath(g13)
    const std::array<std::pair<const char*, GaussMat<8>>, 6> mats = {
        std::pair{"g01", jmath(mat_g01())},
        std::pair{"g23", jmath(mat_g23())},
        std::pair{"g01*g23", jmath(mat_g01()) * jmath(mat_g23())},
        std::pair{"N", mat_N()},
        std::pair{"swap", mat_Jswap()},
        std::pair{"Mrho", mat_Mrho()}};
    for (const auto& [name, M] : mats) {
        Cplx first = 0.0;
        bool have = false;
        for (int j : {0, 1, 4, 7, 11}) {
            Cplx r;
            try {
                r = automorphy_ratio(M, nu_char(j), tp, acc);
            } catch (const domain_error&) {
                continue;
            }
            if (!have) {
                first = r;
                have = true;
                rep.add(std::string(name) + " kappa^8", std::pow(r, 8), 1.0, tol);
            } else {
                rep.add(std::string(name) + " kappa nu" + std::to_string(j), r, first, tol);
            }
        }
    }
    return rep;
}

/// Residual of theta_{a,b}(zeta + n1 tau + n2) against its quasi-period factor.
inline ResidualReport verify_quasi_periodicity(const Characteristic& ch,
                                               const Eigen::VectorXcd& zeta,
                                               const SiegelPoint& tp,
                                               const Eigen::VectorXd& n1,
                                               const Eigen::VectorXd& n2,
                                               Real tol = 1e-9,
                                               const ThetaAccuracy& acc = {}) {
    const int n = tp.dim();
    Eigen::VectorXcd shifted = zeta + tp.tau * n1.cast<Cplx>() + n2.cast<Cplx>();
    Eigen::VectorXd a(n), b(n);
    for (int j = 0; j < n; ++j) {
        a(j) = ch.a[j];
        b(j) = ch.b[j];
    }
    const Cplx quad = 0.5 * (n1.transpose() * tp.tau * n1).value();
    const Cplx lin = (n1.cast<Cplx>().transpose() * zeta).value();
    const Cplx factor = e2pi(0.5 * a.dot(n2) - 0.5 * n1.dot(b) - quad - lin);
    ResidualReport rep{"quasi_periodicity", {}};
    const Cplx rhs = factor * riemann_theta(ch, zeta, tp, acc);
    rep.add("shift", riemann_theta(ch, shifted, tp, acc), rhs,
            tol * (1.0 + std::abs(rhs)));
    return rep;
}

// ---------------------------------------------------------------------------
// The main identity: quaternary AGM = F_D^2 = theta means along periods.
// ---------------------------------------------------------------------------

/// For a >= b >= c >= d > 0 with b < a: checks a/M(a,b,c,d) against
/// F_D(1/4,...,1; 1-(b/a)^2, 1-(c/a)^2, 1-(d/a)^2)^2 and against the theta
/// mean read at tau^# of the period point of those branch values.
inline ResidualReport verify_km_main(Real a, Real b, Real c, Real d,
                                     Real tol_fd = 1e-10, Real tol_theta = 1e-8,
                                     const QuadratureSpec& spec = {},
                                     const ThetaAccuracy& acc = {}) {
    std::array<Real, 4> q = {a, b, c, d};
    std::sort(q.begin(), q.end(), std::greater<Real>());
    a = q[0];
    b = q[1];
    c = q[2];
    d = q[3];
    if (!(d > 0.0 && b < a)) throw domain_error("verify_km_main: need a > b >= c >= d > 0");

    const Real M = mean_limit(MeanKind::KatoMatsumoto4, {{a, b, c, d}}).limit;
    const Real lhs = a / M;

    const Real x1 = 1.0 - (b / a) * (b / a);
    const Real x2 = 1.0 - (c / a) * (c / a);
    const Real x3 = 1.0 - (d / a) * (d / a);
    const FDParams p{0.25, {0.25, 0.25, 0.25}, 1.0};
    const Cplx fd = lauricella_fd(p, {x1, x2, x3});

    ResidualReport rep{"km_main", {}};
    rep.add("agm vs fd^2", lhs, fd * fd, tol_fd * (1.0 + std::abs(fd * fd)));

    const SiegelPoint ts = tau_sharp(period_vector(BranchPoints(x1, x2, x3), spec));
    const Cplx t1 = theta_constant(char4({0, 0, 0, 0}, {0, 0, 0, 0}), ts, acc);
    const Cplx t2 = theta_constant(char4({1, 1, 0, 0}, {0, 0, 0, 0}), ts, acc);
    const Cplx theta_side = (t1 * t1 + t2 * t2) / theta00i_pow4();
    rep.add("agm vs theta", lhs, theta_side, tol_theta * (1.0 + std::abs(theta_side)));
    return rep;
}

/// Binary classical checks: Gauss AGM vs F(1/2,1/2,1;.), Borwein quartic AGM
/// vs F(1/4,3/4,1;.)^2, and the genus-1 theta value at tau_1.
inline ResidualReport verify_binary_means(Real a0, Real b0, Real tol = 1e-10,
                                          const ThetaAccuracy& acc = {}) {
    if (!(0.0 < b0 && b0 < a0)) throw domain_error("verify_binary_means: need 0 < b < a");
    const Real z = 1.0 - (b0 / a0) * (b0 / a0);
    ResidualReport rep{"binary_means", {}};
    const Real mg = mean_limit(MeanKind::Gauss2, {{a0, b0}}).limit;
    rep.add("gauss", a0 / mg, gauss_2f1(0.5, 0.5, 1.0, z), tol * (1.0 + a0 / mg));
    const Real mb = mean_limit(MeanKind::BorweinQuartic2, {{a0, b0}}).limit;
    const Cplx f = gauss_2f1(0.25, 0.75, 1.0, z);
    rep.add("borwein4", a0 / mb, f * f, tol * (1.0 + a0 / mb));

    const Cplx f2 = gauss_2f1(0.25, 0.75, 1.0, (b0 / a0) * (b0 / a0));
    const Cplx tau1 = std::sqrt(2.0) * Cplx(0.0, 1.0) * f2 / f;
    const Cplx t00 = jacobi_theta(0, 0, tau1, acc);
    const Cplx t10 = jacobi_theta(1, 0, tau1, acc);
    rep.add("tau1 theta", a0 / mb, std::pow(t00, 4) + std::pow(t10, 4),
            tol * (1.0 + a0 / mb));
    return rep;
}

/// For v = (1, -t, 0, 0) the means collapse to genus 1 at tau_1 = i t:
/// a = theta00(i)^4 (th00^4 + th10^4), b_j = theta00(i)^4 (th00^4 - th10^4).
inline ResidualReport verify_diagonal_reduction(Real t, Real tol = 1e-10,
                                                const ThetaAccuracy& acc = {}) {
    if (!(t > 0.0)) throw domain_error("verify_diagonal_reduction: t <= 0");
    Eigen::Vector4cd w;
    w << 1.0, -t, 0.0, 0.0;
    const ThetaMeans m = means_of_v(BallPoint(w), acc);
    const Cplx tau1(0.0, t);
    const Cplx t00 = jacobi_theta(0, 0, tau1, acc);
    const Cplx t10 = jacobi_theta(1, 0, tau1, acc);
    const Cplx alpha = std::pow(t00, 4) + std::pow(t10, 4);
    const Cplx beta = std::pow(t00, 4) - std::pow(t10, 4);
    const Real c = theta00i_pow4();
    ResidualReport rep{"diagonal_reduction", {}};
    auto add = [&](std::string id, Cplx lhs, Cplx rhs) {
        rep.add(std::move(id), lhs, rhs, tol * (1.0 + std::abs(rhs)));
    };
    add("a", m.a, c * alpha);
    add("b1", m.b1, c * beta);
    add("b2", m.b2, c * beta);
    add("b3", m.b3, c * beta);
    return rep;
}

/// Iterated R drives all four means to theta00(i)^4.
inline Real mean_limit_residual(const BallPoint& v, int steps = 12,
                                const ThetaAccuracy& acc = {}) {
    BallPoint w = v;
    for (int k = 0; k < steps; ++k) w = apply(mat_R(), w);
    const ThetaMeans m = means_of_v(w, acc);
    const Real target = theta00i_pow4();
    return std::max({std::abs(m.a - target), std::abs(m.b1 - target),
                     std::abs(m.b2 - target), std::abs(m.b3 - target)});
}

// ---------------------------------------------------------------------------
// Boundary orbit representatives.
// ---------------------------------------------------------------------------

/// Five isotropic boundary vectors (v* U v = 0), linked by the inverse actions
/// g01^{-1}, g12^{-1}, g23^{-1} applied to (1,0,0,0); not ball points.
inline std::array<GaussVec4, 5> cusp_vectors() {
    using D = DyadicGaussian;
    std::array<GaussVec4, 5> c;
    c[0] = {D(1), D(0), D(0), D(0)};
    c[1] = qagm::apply(unitary_inverse(mat_g01()), c[0]);
    c[2] = qagm::apply(unitary_inverse(mat_g12()), c[1]);
    c[3] = qagm::apply(unitary_inverse(mat_g23()), c[2]);
    c[4] = {D(0), D(1), D(0), D(0)};
    return c;
}

} // namespace qagm

#endif
