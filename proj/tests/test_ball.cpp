#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qagm/ball.hpp"
#include "qagm/periods.hpp"

using namespace qagm;
using D = DyadicGaussian;

namespace {
BallPoint sample_point() {
    Eigen::Vector4cd w;
    w << Cplx(1.0, 0.0), Cplx(-1.1, 0.2), Cplx(0.1, 0.3), Cplx(0.2, -0.1);
    return BallPoint(w);
}
} // namespace

TEST_CASE("named elements are U-unitary, lifts are symplectic") {
    for (const auto& g : {mat_g01(), mat_g12(), mat_g13(), mat_g23(), mat_R(), mat_R1()}) {
        CHECK(is_unitary(g));
        CHECK(is_symplectic(jmath(g)));
    }
    CHECK(is_symplectic(mat_N()));
    CHECK(is_symplectic(mat_Jswap()));
    CHECK(is_symplectic(mat_Mrho()));
    CHECK(is_symplectic(natural_lift(mat_S1())));
}

TEST_CASE("exact group relations") {
    CHECK(mat_g12() == unitary_inverse(mat_g23()) * mat_g13() * mat_g23());
    CHECK(mat_R() == mat_g13() * mat_R1());
    CHECK(mat_R() == mat_R1() * mat_g13());
    // R^4 = diag(-1/4, -4, 1, 1)
    GaussMat<4> r4 = GaussMat<4>::identity();
    for (int k = 0; k < 4; ++k) r4 = r4 * mat_R();
    GaussMat<4> expect;
    expect(0, 0) = D(-1, 0, 2);
    expect(1, 1) = D(-4);
    expect(2, 2) = D(1);
    expect(3, 3) = D(1);
    CHECK(r4 == expect);
    // M1 = B2 B1 S1 B1^{-1}, i.e. M1 B1 = B2 B1 S1, and B2 M1 B1 = B1 S1
    CHECK(mat_M1() * mat_B1() == mat_B2() * mat_B1() * mat_S1());
    CHECK(mat_B2() * mat_M1() * mat_B1() == mat_B1() * mat_S1());
    // the Sp(4) lift of S1 equals jmath(R1)
    CHECK(natural_lift(mat_S1()) == jmath(mat_R1()));
}

TEST_CASE("jmath is a homomorphism into Sp(8)") {
    const auto g = mat_g01(), h = mat_g13();
    CHECK(jmath(g * h) == jmath(g) * jmath(h));
    CHECK(jmath(GaussMat<4>::identity()) == GaussMat<8>::identity());
    // Mrho = jmath(iI) = [[O,U],[-U,O]]
    const auto u = u_mat();
    const auto m = mat_Mrho();
    CHECK(block_of(m, 0, 0) == GaussMat<4>::zero());
    CHECK(block_of(m, 0, 1) == u);
    CHECK(block_of(m, 1, 0) == -u);
    CHECK(block_of(m, 1, 1) == GaussMat<4>::zero());
}

TEST_CASE("tau at the center and on the diagonal family") {
    Eigen::Vector4cd w;
    w << 1.0, -1.0, 0.0, 0.0;
    const SiegelPoint tp = tau_of_v(BallPoint(w));
    CHECK((tp.tau - Cplx(0, 1) * Eigen::Matrix4cd::Identity()).norm() < 1e-14);

    const Real t = 0.7;
    Eigen::Vector4cd wd;
    wd << 1.0, -t, 0.0, 0.0;
    const SiegelPoint td = tau_of_v(BallPoint(wd));
    Eigen::Matrix4cd expect = Eigen::Matrix4cd::Zero();
    expect(0, 0) = Cplx(0, t);
    expect(1, 1) = Cplx(0, 1.0 / t);
    expect(2, 2) = Cplx(0, 1);
    expect(3, 3) = Cplx(0, 1);
    CHECK((td.tau - expect).norm() < 1e-14);
    // tau^# = N.tau inverts the second diagonal entry: diag(it, it, i, i)
    const SiegelPoint ts = sp_act(mat_N(), td);
    expect(1, 1) = Cplx(0, t);
    CHECK((ts.tau - expect).norm() < 1e-14);
}

TEST_CASE("algebraic constraints on tau(v)") {
    const BallPoint v = sample_point();
    const SiegelPoint tp = tau_of_v(v);
    const Eigen::Matrix4cd u = u_eigen();
    CHECK((tp.tau - tp.tau.transpose()).norm() < 1e-14);
    CHECK(std::abs(tp.tau.determinant() - 1.0) < 1e-13);
    CHECK(((u * tp.tau) * (u * tp.tau) + Eigen::Matrix4cd::Identity()).norm() < 1e-13);
}

TEST_CASE("equivariance tau(g v) = jmath(g) . tau(v)") {
    const BallPoint v = sample_point();
    for (const auto& g : {mat_g01(), mat_g12(), mat_g13(), mat_g23(), mat_R()}) {
        const SiegelPoint lhs = tau_of_v(apply(g, v));
        const SiegelPoint rhs = sp_act(jmath(g), tau_of_v(v));
        CHECK((lhs.tau - rhs.tau).norm() < 1e-12);
    }
}

TEST_CASE("chi of a lift against the Hermitian forms") {
    // chi(jmath(g), tau(v)) = (gv)^T U (gv) / (det g . v^T U v)
    const BallPoint v = sample_point();
    const SiegelPoint tp = tau_of_v(v);
    for (const auto& g : {mat_g01(), mat_g13(), mat_g23()}) {
        const Cplx lhs = chi(jmath(g), tp);
        const BallPoint gv = apply(g, v);
        const Cplx rhs = gv.bilin_form() / (g.det().to_complex() * v.bilin_form());
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
    }
    // chi(N, tau(v)): i (v^T U v) tau_22 = 2 v1^2
    const Cplx lhs = Cplx(0, 1) * v.bilin_form() * chi(mat_N(), tp);
    CHECK(std::abs(lhs - 2.0 * v.v(0) * v.v(0)) < 1e-12);
}

TEST_CASE("cocycle relation for chi") {
    const BallPoint v = sample_point();
    const SiegelPoint tp = tau_of_v(v);
    const GaussMat<8> L = jmath(mat_g01()), M = jmath(mat_g13());
    const Cplx lhs = chi(L * M, tp);
    const Cplx rhs = chi(L, sp_act(M, tp)) * chi(M, tp);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
}

TEST_CASE("characteristic action is affine and exact") {
    const GaussMat<8> M = jmath(mat_g01());
    const Characteristic zero = char4({0, 0, 0, 0}, {0, 0, 0, 0});
    const CharVec shift = char_act(M, char_vec(zero));
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int it = 0; it < 5; ++it) {
        std::vector<int> a(4), b(4);
        for (int j = 0; j < 4; ++j) a[j] = d(rng), b[j] = d(rng);
        const CharVec out = char_act(M, char_vec(Characteristic{a, b}));
        const CharVec lin = row_times_mat(char_vec(Characteristic{a, b}), symplectic_inverse(M));
        for (int j = 0; j < 8; ++j) CHECK(out[j] == lin[j] + shift[j]);
    }
    // phi is real dyadic for integral input
    CHECK(phi_ab(M, char4({1, 0, 1, 1}, {0, 1, 0, 0})).is_real());
    CharVec half{};
    half[2] = D(1, 0, 1); // 1/2: not an integer characteristic
    CHECK_THROWS_AS(char_of_vec(half), domain_error);
}

TEST_CASE("symplectic inverse and unitary inverse") {
    const auto g = mat_g01();
    CHECK(g * unitary_inverse(g) == GaussMat<4>::identity());
    const auto M = jmath(g);
    CHECK(M * symplectic_inverse(M) == GaussMat<8>::identity());
    GaussMat<4> bad = GaussMat<4>::identity();
    bad(0, 0) = D(2);
    CHECK_THROWS_AS(unitary_inverse(bad), domain_error);
}

TEST_CASE("ball membership enforcement") {
    Eigen::Vector4cd w;
    w << 1.0, 1.0, 0.0, 0.0; // v*Uv = 2 > 0
    CHECK_THROWS_AS(BallPoint{w}, domain_error);
    w << 1.0, -1.0, 0.0, 0.0;
    CHECK(BallPoint(w).herm_form() == doctest::Approx(-2.0));
}

TEST_CASE("nu-table sanity") {
    CHECK(nu_char(0) == char4({0, 0, 0, 0}, {0, 0, 0, 0}));
    CHECK(nu_char(3) == char4({1, 1, 1, 1}, {1, 1, 1, 1}));
    CHECK(nu_char(11) == char4({1, 1, 0, 0}, {1, 1, 1, 1}));
    CHECK_THROWS_AS(nu_char(12), domain_error);
    // all twelve are even: a U-compatible parity check a.b = 0 mod 2
    for (int j = 0; j < 12; ++j) {
        const Characteristic ch = nu_char(j);
        int ab = 0;
        for (int k = 0; k < 4; ++k) ab += ch.a[k] * ch.b[k];
        CHECK(ab % 2 == 0);
    }
}
