// Certified root finding: house and Mahler measure against closed forms,
// exact outside-the-circle counts, and the real-root bisection helper.
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "polyhouse/poly.hpp"
#include "polyhouse/roots.hpp"

using namespace polyhouse;

namespace {
IntPolynomial full(const char* s) { return parse_poly(s, Encoding::Full); }
IntPolynomial half(const char* s) { return parse_poly(s, Encoding::Half); }
}  // namespace

TEST_SUITE("roots") {

TEST_CASE("house of x^2 + 3x + 1 is (3 + sqrt 5)/2") {
    auto [h, err] = house(full("1 3 1"));
    CHECK(err <= 1e-12);
    CHECK(h == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
}

TEST_CASE("house of x^d - 2 is 2^(1/d)") {
    for (int d : {2, 3, 5, 10, 17}) {
        std::string s = "1";
        for (int i = 0; i < d - 1; ++i) s += " 0";
        s += " -2";
        auto [h, err] = house(full(s.c_str()));
        CHECK(err <= 1e-12);
        CHECK(h == doctest::Approx(std::pow(2.0, 1.0 / d)).epsilon(1e-13));
    }
}

TEST_CASE("golden ratio: x^2 - x - 1") {
    RootSummary s = analyze(full("1 -1 -1"));
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(s.house == doctest::Approx(phi).epsilon(1e-14));
    CHECK(s.mahler == doctest::Approx(phi).epsilon(1e-14));
    CHECK(s.nu == 1);
    CHECK(s.roots.size() == 2);
}

TEST_CASE("degree-10 Salem-type palindrome: one root outside") {
    RootSummary s = analyze(half("1 1 0 -1 -1 -1"));
    CHECK(s.house == doctest::Approx(1.17628081825992).epsilon(1e-13));
    CHECK(s.nu == 1);
    // All roots off the circle pair up, so the measure equals the house.
    CHECK(s.mahler == doctest::Approx(s.house).epsilon(1e-12));
    CHECK(s.mahler < 1.3);
}

TEST_CASE("theta: real root of x^3 - x - 1") {
    auto [h, err] = house(full("1 0 -1 -1"));
    CHECK(err <= 1e-13);
    CHECK(h == doctest::Approx(1.32471795724475).epsilon(1e-13));
}

TEST_CASE("cyclotomic polynomials have house 1 and nu 0") {
    for (const char* s : {"1 1", "1 -1", "1 1 1", "1 0 1", "1 1 1 1 1"}) {
        RootSummary r = analyze(full(s));
        CHECK(r.house == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(r.nu == 0);
        CHECK(r.mahler == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("count_outside_unit is exact for reciprocal even degree") {
    CHECK(count_outside_unit(half("1 1 0 -1 -1 -1")) == 1);
    CHECK(count_outside_unit(half("1 1 3")) == 2);
    CHECK(count_outside_unit(full("1 1 1 1 1")) == 0);
    CHECK(count_outside_unit(full("1 3 1")) == 1);
    CHECK_THROWS_AS(count_outside_unit(full("1 2 1")),
                    std::invalid_argument);  // (x+1)^2 is not square-free
}

TEST_CASE("all_roots certifies every disk radius") {
    auto roots = all_roots(full("1 0 0 0 0 -1 0 0 0 0 -1"), 1e-13);
    CHECK(roots.size() == 10);
    for (const auto& r : roots) CHECK(r.radius <= 1e-13);
}

TEST_CASE("mahler measure multiplies over outside roots") {
    // x^2 - 3x + 1 has roots (3 +- sqrt 5)/2; only one exceeds 1.
    double m = mahler_measure(full("1 -3 1"));
    CHECK(m == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
    // x^2 - 3 has both roots at sqrt 3.
    CHECK(mahler_measure(full("1 0 -3")) == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("real_root_in_interval bisects an exact bracket") {
    IntPolynomial p = full("1 0 -1 -1");
    auto r = real_root_in_interval(p, 1, 1, 2, 1);
    REQUIRE(r.has_value());
    CHECK(r->hi - r->lo <= 1e-12);
    CHECK(r->value == doctest::Approx(1.32471795724475).epsilon(1e-12));
    CHECK(r->lo <= r->value);
    CHECK(r->value <= r->hi);
    CHECK_FALSE(real_root_in_interval(p, 2, 1, 3, 1).has_value());
}

TEST_CASE("house rejects degenerate input") {
    CHECK_THROWS_AS(house(full("5")), std::invalid_argument);
    CHECK_THROWS_AS(all_roots(full("1 1"), 1e-20), std::invalid_argument);
}

}  // TEST_SUITE
