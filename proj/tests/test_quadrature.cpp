#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qagm/quadrature.hpp"

using namespace qagm;

TEST_CASE("pure beta integrals") {
    // int_0^1 t^{-1/4}(1-t)^{-1/4} dt = B(3/4,3/4)
    QuadratureSpec spec;
    const Real exact = std::beta(0.75, 0.75);
    auto q = quad_segment([](Real) { return Cplx(1.0); }, spec);
    CHECK(std::abs(q.value - exact) < 1e-13);
    CHECK(q.error < 1e-12);

    spec.left_exponent = -0.75;
    spec.right_exponent = -0.25;
    const Real exact2 = std::beta(0.25, 0.75); // = sqrt(2) pi
    auto q2 = quad_segment([](Real) { return Cplx(1.0); }, spec);
    CHECK(std::abs(q2.value - exact2) < 1e-12);
    CHECK(std::abs(exact2 - std::sqrt(2.0) * pi) < 1e-12);
}

TEST_CASE("smooth factor against brute-force midpoint rule") {
    QuadratureSpec spec;
    spec.left_exponent = -0.25;
    spec.right_exponent = -0.5;
    auto f = [](Real t) { return Cplx(std::exp(t) * std::cos(3.0 * t)); };
    auto q = quad_segment(f, spec);

    // midpoint rule on the weighted integrand; slow but independent
    const int n = 2000000;
    Real s = 0.0;
    for (int j = 0; j < n; ++j) {
        const Real t = (j + 0.5) / n;
        s += std::pow(t, -0.25) * std::pow(1.0 - t, -0.5) * std::exp(t) * std::cos(3.0 * t);
    }
    s /= n;
    CHECK(std::abs(q.value.real() - s) < 5e-3); // midpoint is the weak side here
    CHECK(q.error < 1e-12);
}

TEST_CASE("tanh-sinh agrees with Gauss-Jacobi") {
    QuadratureSpec gj;
    gj.left_exponent = -0.75;
    gj.right_exponent = -0.25;
    auto f = [](Real t) { return Cplx(1.0 / (1.0 + t * t)); };
    auto a = quad_segment(f, gj);
    QuadratureSpec ts = gj;
    ts.scheme = QuadScheme::TanhSinh;
    auto b = quad_segment(f, ts);
    CHECK(std::abs(a.value - b.value) < 1e-12);
}

TEST_CASE("input validation") {
    QuadratureSpec spec;
    spec.node_count = 2;
    CHECK_THROWS_AS(quad_segment([](Real) { return Cplx(1.0); }, spec), domain_error);
    spec.node_count = 16;
    spec.left_exponent = -1.5;
    CHECK_THROWS_AS(quad_segment([](Real) { return Cplx(1.0); }, spec), domain_error);
}

TEST_CASE("error indicator shrinks under refinement") {
    auto f = [](Real t) { return Cplx(std::cos(10.0 * t)); };
    QuadratureSpec coarse;
    coarse.node_count = 8;
    QuadratureSpec fine;
    fine.node_count = 48;
    CHECK(quad_segment(f, fine).error <= quad_segment(f, coarse).error);
}
