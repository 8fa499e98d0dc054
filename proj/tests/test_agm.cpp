#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qagm/agm.hpp"
#include "qagm/hypergeom.hpp"

using namespace qagm;

TEST_CASE("equal terms are fixed points") {
    for (MeanKind k : {MeanKind::Gauss2, MeanKind::BorweinCubic2, MeanKind::BorweinQuartic2}) {
        const auto s = iterate_mean(k, {{2.5, 2.5}});
        CHECK(s.terms[0] == doctest::Approx(2.5).epsilon(1e-15));
        CHECK(s.terms[1] == doctest::Approx(2.5).epsilon(1e-15));
    }
    for (MeanKind k : {MeanKind::Borchardt4, MeanKind::KatoMatsumoto4}) {
        const auto s = iterate_mean(k, {{2.5, 2.5, 2.5, 2.5}});
        for (Real t : s.terms) CHECK(t == doctest::Approx(2.5).epsilon(1e-15));
    }
}

TEST_CASE("hand-evaluated quaternary step") {
    const auto s = iterate_mean(MeanKind::KatoMatsumoto4, {{1.0, 0.8, 0.6, 0.4}});
    CHECK(s.terms[0] == doctest::Approx(0.7).epsilon(1e-15));
    // sqrt((1+0.4)(0.8+0.6))/2 = sqrt(1.96)/2 = 0.7
    CHECK(s.terms[1] == doctest::Approx(0.7).epsilon(1e-15));
    // sqrt((1+0.6)(0.8+0.4))/2 = sqrt(1.92)/2
    CHECK(s.terms[2] == doctest::Approx(std::sqrt(1.92) / 2.0).epsilon(1e-15));
    // sqrt((1+0.8)(0.6+0.4))/2 = sqrt(1.8)/2
    CHECK(s.terms[3] == doctest::Approx(std::sqrt(1.8) / 2.0).epsilon(1e-15));
}

TEST_CASE("scale equivariance") {
    for (MeanKind k : {MeanKind::Gauss2, MeanKind::BorweinCubic2, MeanKind::BorweinQuartic2}) {
        const Real m1 = mean_limit(k, {{1.0, 0.3}}).limit;
        const Real m2 = mean_limit(k, {{7.0, 2.1}}).limit;
        CHECK(m2 == doctest::Approx(7.0 * m1).epsilon(1e-14));
    }
    for (MeanKind k : {MeanKind::Borchardt4, MeanKind::KatoMatsumoto4}) {
        const Real m1 = mean_limit(k, {{1.0, 0.8, 0.5, 0.3}}).limit;
        const Real m2 = mean_limit(k, {{3.0, 2.4, 1.5, 0.9}}).limit;
        CHECK(m2 == doctest::Approx(3.0 * m1).epsilon(1e-14));
    }
}

TEST_CASE("limits sit between min and max") {
    const auto tr = mean_limit(MeanKind::KatoMatsumoto4, {{1.0, 0.8, 0.6, 0.4}});
    CHECK(tr.limit > 0.4);
    CHECK(tr.limit < 1.0);
    CHECK(tr.iterations < 10); // better than quadratic spread shrink
}

TEST_CASE("quadratic convergence of the quaternary mean") {
    AgmState s{{1.0, 0.8, 0.6, 0.4}};
    std::vector<Real> spread;
    for (int n = 0; n < 4; ++n) {
        const auto [mn, mx] = std::minmax_element(s.terms.begin(), s.terms.end());
        spread.push_back(*mx - *mn);
        s = iterate_mean(MeanKind::KatoMatsumoto4, s);
    }
    // spread_{n+1} <= C spread_n^2 behaviour
    CHECK(spread[2] < spread[1] * spread[1]);
    CHECK(spread[3] < spread[2] * spread[2]);
}

TEST_CASE("quaternary step on a doubled pair") {
    // (a, a, b, b) maps to ((a+b)/2, (a+b)/2, (a+b)/2, sqrt(ab))
    const auto s = iterate_mean(MeanKind::KatoMatsumoto4, {{1.0, 1.0, 0.25, 0.25}});
    CHECK(s.terms[0] == doctest::Approx(0.625).epsilon(1e-15));
    CHECK(s.terms[1] == doctest::Approx(0.625).epsilon(1e-15));
    CHECK(s.terms[2] == doctest::Approx(0.625).epsilon(1e-15));
    CHECK(s.terms[3] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("borwein quartic against its hypergeometric value") {
    for (Real b : {0.9, 0.5, 0.15}) {
        const Real m = mean_limit(MeanKind::BorweinQuartic2, {{1.0, b}}).limit;
        const Cplx f = gauss_2f1(0.25, 0.75, 1.0, 1.0 - b * b);
        CHECK(std::abs(1.0 / m - f * f) < 1e-12 * std::abs(f * f));
    }
}

TEST_CASE("borwein cubic against its hypergeometric value") {
    for (Real b : {0.9, 0.4}) {
        const Real m = mean_limit(MeanKind::BorweinCubic2, {{1.0, b}}).limit;
        const Cplx f = gauss_2f1(1.0 / 3.0, 2.0 / 3.0, 1.0, 1.0 - b * b * b);
        CHECK(std::abs(1.0 / m - f) < 1e-12 * std::abs(f));
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(iterate_mean(MeanKind::Gauss2, {{1.0, 2.0, 3.0, 4.0}}), domain_error);
    CHECK_THROWS_AS(iterate_mean(MeanKind::KatoMatsumoto4, {{1.0, 2.0}}), domain_error);
    CHECK_THROWS_AS(iterate_mean(MeanKind::Gauss2, {{1.0, -2.0}}), domain_error);
    CHECK_THROWS_AS(mean_limit(MeanKind::Gauss2, {{1.0, 0.5}}, -1.0), domain_error);
}

TEST_CASE("trace bookkeeping") {
    const auto tr = mean_limit(MeanKind::Borchardt4, {{2.0, 1.0, 0.5, 0.25}});
    CHECK(tr.kind == MeanKind::Borchardt4);
    CHECK(static_cast<int>(tr.states.size()) == tr.iterations + 1);
    CHECK(tr.states.front().terms[0] == 2.0);
    CHECK(tr.limit == tr.states.back().terms[0]);
}
