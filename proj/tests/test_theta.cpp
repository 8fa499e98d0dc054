#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qagm/ball.hpp"
#include "qagm/identities.hpp"
#include "qagm/theta.hpp"

using namespace qagm;

namespace {
SiegelPoint diag_tau(std::initializer_list<Cplx> d) {
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(static_cast<long>(d.size()),
                                                static_cast<long>(d.size()));
    int j = 0;
    for (Cplx z : d) t(j, j) = z, ++j;
    return SiegelPoint(t);
}
} // namespace

TEST_CASE("genus-1 value at i") {
    // theta_00(i) = pi^{1/4} / Gamma(3/4)
    const Cplx t = jacobi_theta(0, 0, Cplx(0.0, 1.0));
    CHECK(std::abs(t - std::pow(pi, 0.25) / gamma34()) < 1e-12);
    CHECK(std::abs(t.imag()) < 1e-14);
}

TEST_CASE("genus-1 doubling formulas") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<Real> ur(-0.4, 0.4), ui(0.6, 2.0);
    for (int it = 0; it < 6; ++it) {
        const Cplx tau(ur(rng), ui(rng));
        const Cplx t00 = jacobi_theta(0, 0, tau), t01 = jacobi_theta(0, 1, tau);
        const Cplx d00 = jacobi_theta(0, 0, 2.0 * tau), d01 = jacobi_theta(0, 1, 2.0 * tau);
        CHECK(std::abs(d00 * d00 - 0.5 * (t00 * t00 + t01 * t01)) < 1e-12);
        CHECK(std::abs(d01 * d01 - t00 * t01) < 1e-12);
    }
}

TEST_CASE("odd characteristics vanish") {
    const Cplx tau(0.3, 1.1);
    CHECK(std::abs(jacobi_theta(1, 1, tau)) < 1e-13);
    // genus 4: a.b odd makes the constant vanish at any tau
    const SiegelPoint tp = diag_tau({Cplx(0, 1.0), Cplx(0.2, 0.9), Cplx(0, 1.3), Cplx(-0.1, 1.7)});
    CHECK(std::abs(theta_constant(char4({1, 0, 0, 0}, {1, 0, 0, 0}), tp)) < 1e-13);
    CHECK(std::abs(theta_constant(char4({1, 1, 1, 0}, {1, 1, 1, 0}), tp)) < 1e-13);
}

TEST_CASE("block-diagonal tau factorizes the series") {
    const Cplx t1(0.1, 0.8), t2(-0.2, 1.4);
    const SiegelPoint tp = diag_tau({t1, t2});
    const Cplx joint = theta_constant({{1, 0}, {0, 1}}, tp);
    const Cplx split = jacobi_theta(1, 0, t1) * jacobi_theta(0, 1, t2);
    CHECK(std::abs(joint - split) < 1e-13);
}

TEST_CASE("parity in the characteristic") {
    // shifting b by 2m multiplies by e(a m / 2); shifting a by 2n is invisible
    const SiegelPoint tp = diag_tau({Cplx(0.05, 1.0), Cplx(0, 1.2)});
    const Cplx base = theta_constant({{1, 0}, {0, 1}}, tp);
    CHECK(std::abs(theta_constant({{3, 0}, {0, 1}}, tp) - base) < 1e-13);
    CHECK(std::abs(theta_constant({{1, 0}, {2, 1}}, tp) - e2pi(0.5) * base) < 1e-13);
}

TEST_CASE("quasi-periodicity at random arguments") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<Real> u(-0.3, 0.3);
    std::uniform_int_distribution<int> ni(-2, 2);
    const BranchPoints x(0.2, 0.5, 0.8);
    const BallPoint v = period_vector(x).ball();
    const SiegelPoint tp = tau_of_v(v);
    for (int it = 0; it < 20; ++it) {
        Eigen::VectorXcd zeta(4);
        Eigen::VectorXd n1(4), n2(4);
        for (int j = 0; j < 4; ++j) {
            zeta(j) = Cplx(u(rng), u(rng));
            n1(j) = ni(rng);
            n2(j) = ni(rng);
        }
        const auto rep = verify_quasi_periodicity(nu_char(it % 12), zeta, tp, n1, n2, 1e-9);
        CHECK(rep.pass());
    }
}

TEST_CASE("ball vanishing for isotropic-incompatible characteristics") {
    const BranchPoints x(0.3, 0.55, 0.7);
    const BallPoint v = period_vector(x).ball();
    const SiegelPoint tp = tau_of_v(v);
    const int u[4][4] = {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> b = {mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1};
        int q = 0;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) q += b[r] * u[r][c] * b[c];
        if (q % 4 == 0) continue;
        std::vector<int> bu = {b[1], b[0], b[2], b[3]};
        CHECK(std::abs(theta_constant({bu, b}, tp)) < 1e-10);
    }
}

TEST_CASE("truncation control") {
    ThetaAccuracy strict;
    strict.target_eps = 1e-13;
    ThetaAccuracy loose;
    loose.target_eps = 1e-8;
    const SiegelPoint tp = diag_tau({Cplx(0, 0.9), Cplx(0, 1.1)});
    const Cplx a = theta_constant({{0, 0}, {0, 0}}, tp, strict);
    const Cplx b = theta_constant({{0, 0}, {0, 0}}, tp, loose);
    CHECK(std::abs(a - b) < 1e-7);
    ThetaAccuracy bad;
    bad.target_eps = -1.0;
    CHECK_THROWS_AS(theta_constant({{0, 0}, {0, 0}}, tp, bad), domain_error);
}

TEST_CASE("siegel point validation") {
    Eigen::MatrixXcd t(2, 2);
    t << Cplx(0, 1), Cplx(0.5, 0), Cplx(0.2, 0), Cplx(0, 1);
    CHECK_THROWS_AS(SiegelPoint{t}, domain_error); // not symmetric
    t << Cplx(0, -1), Cplx(0.2, 0), Cplx(0.2, 0), Cplx(0, 1);
    CHECK_THROWS_AS(SiegelPoint{t}, domain_error); // Im not positive
    CHECK_THROWS_AS(jacobi_theta(0, 0, Cplx(0.5, -0.1)), domain_error);
}
