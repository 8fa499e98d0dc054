#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qagm/scalar.hpp"

using namespace qagm;

TEST_CASE("pochhammer basic values") {
    CHECK(pochhammer(0.25, 0) == Cplx(1.0));
    CHECK(std::abs(pochhammer(0.25, 1) - Cplx(0.25)) < 1e-16);
    // (1/4)(5/4) = 5/16
    CHECK(std::abs(pochhammer(0.25, 2) - Cplx(0.3125)) < 1e-16);
    CHECK(std::abs(pochhammer(Cplx(0.0, 1.0), 2) - Cplx(-1.0, 1.0)) < 1e-15);
}

TEST_CASE("gamma34 against independent value") {
    // Gamma(3/4) = 1.225416702465177645... (standard tables)
    CHECK(gamma34() == doctest::Approx(1.2254167024651776).epsilon(1e-14));
}

TEST_CASE("e2pi is the unit character") {
    CHECK(std::abs(e2pi(0.5) + 1.0) < 1e-15);
    CHECK(std::abs(e2pi(0.25) - Cplx(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(e2pi(1.0) - 1.0) < 1e-14);
    // complex argument: e(i) = exp(-2 pi)
    CHECK(std::abs(e2pi(Cplx(0.0, 1.0)) - std::exp(-2.0 * pi)) < 1e-15);
}

TEST_CASE("require_finite throws") {
    CHECK_THROWS_AS(require_finite(Cplx(std::nan(""), 0.0), "t"), domain_error);
}
