// Parsing, palindromic half-expansion, composition in x^k, primitivity
// decomposition, and exact sign evaluation at rational points.
#include <stdexcept>

#include "doctest.h"
#include "polyhouse/poly.hpp"

using namespace polyhouse;

TEST_SUITE("poly") {

TEST_CASE("full encoding round trip, descending coefficients") {
    IntPolynomial p = parse_poly("1 0 -1 -1", Encoding::Full);
    CHECK(p.degree() == 3);
    CHECK(p.monic());
    CHECK(p.height() == 1);
    CHECK(format_poly(p, Encoding::Full) == "1 0 -1 -1");

    IntPolynomial q = parse_poly("2 -3 5", Encoding::Full);
    CHECK(q.degree() == 2);
    CHECK_FALSE(q.monic());
    CHECK(q.height() == 5);
}

TEST_CASE("half encoding expands palindromically") {
    IntPolynomial p = parse_poly("1 3", Encoding::Half);
    CHECK(p.degree() == 2);
    CHECK(p == parse_poly("1 3 1", Encoding::Full));

    IntPolynomial q = parse_poly("1 1 0 -1 -1 -1", Encoding::Half);
    CHECK(q.degree() == 10);
    CHECK(q == parse_poly("1 1 0 -1 -1 -1 -1 -1 0 1 1", Encoding::Full));
    CHECK(format_poly(q, Encoding::Half) == "1 1 0 -1 -1 -1");
    CHECK(is_reciprocal(q));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_poly("", Encoding::Full), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("0 1 1", Encoding::Full),
                    std::invalid_argument);  // leading zero
    CHECK_THROWS_AS(parse_poly("1 two 3", Encoding::Full),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("2 3", Encoding::Half),
                    std::invalid_argument);  // half must be monic
    CHECK_THROWS_AS(parse_poly("1", Encoding::Half),
                    std::invalid_argument);  // needs degree >= 2
}

TEST_CASE("half_from_poly is the inverse of expand") {
    HalfSpec s;
    s.degree = 8;
    s.half = {1, 0, 0, 1, 1};
    IntPolynomial p = s.expand();
    CHECK(p == parse_poly("1 0 0 1 1 1 0 0 1", Encoding::Full));
    HalfSpec back = half_from_poly(p);
    CHECK(back.degree == 8);
    CHECK(back.half == s.half);
    CHECK_THROWS_AS(half_from_poly(parse_poly("1 0 -1 -1", Encoding::Full)),
                    std::invalid_argument);
}

TEST_CASE("is_reciprocal distinguishes palindromes") {
    CHECK(is_reciprocal(parse_poly("1 3 1", Encoding::Full)));
    CHECK(is_reciprocal(parse_poly("1 0 1", Encoding::Full)));
    CHECK_FALSE(is_reciprocal(parse_poly("1 0 -1 -1", Encoding::Full)));
    CHECK_FALSE(is_reciprocal(parse_poly("1 0 0 -2", Encoding::Full)));
}

TEST_CASE("compose_power substitutes x^k") {
    IntPolynomial p = parse_poly("1 3 1", Encoding::Full);
    CHECK(compose_power(p, 1) == p);
    CHECK(compose_power(p, 2) == parse_poly("1 0 3 0 1", Encoding::Full));
    CHECK(compose_power(p, 3) ==
          parse_poly("1 0 0 3 0 0 1", Encoding::Full));
    CHECK(compose_power(p, 2).degree() == 4);
}

TEST_CASE("negate_argument flips odd coefficients") {
    IntPolynomial p = parse_poly("1 1 0 -1 -1", Encoding::Full);  // degree 4
    IntPolynomial n = negate_argument(p);
    CHECK(n == parse_poly("1 -1 0 1 -1", Encoding::Full));
    CHECK(negate_argument(n) == p);  // involution on even degree
}

TEST_CASE("primitivity_decompose finds the largest exponent gcd") {
    auto [base, k] = primitivity_decompose(parse_poly("1 0 3 0 1",
                                                      Encoding::Full));
    CHECK(k == 2);
    CHECK(base == parse_poly("1 3 1", Encoding::Full));

    auto [base2, k2] =
        primitivity_decompose(parse_poly("1 1 0 -1 -1", Encoding::Full));
    CHECK(k2 == 1);
    CHECK(base2 == parse_poly("1 1 0 -1 -1", Encoding::Full));

    // x^12 + 1 is a polynomial in x^12.
    auto [base3, k3] = primitivity_decompose(
        parse_poly("1 0 0 0 0 0 0 0 0 0 0 0 1", Encoding::Full));
    CHECK(k3 == 12);
    CHECK(base3 == parse_poly("1 1", Encoding::Full));
}

TEST_CASE("sign_at evaluates exact signs at rationals") {
    IntPolynomial p = parse_poly("1 0 -1 -1", Encoding::Full);  // x^3 - x - 1
    CHECK(sign_at(p, 1, 1) == -1);   // P(1) = -1
    CHECK(sign_at(p, 3, 2) == 1);    // P(3/2) = 7/8
    CHECK(sign_at(p, 4, 3) == 1);    // P(4/3) = 1/27
    CHECK(sign_at(p, 2, 1) == 1);    // P(2) = 5
    IntPolynomial q = parse_poly("1 -2", Encoding::Full);
    CHECK(sign_at(q, 2, 1) == 0);    // exact zero at the root
}

TEST_CASE("height is the largest absolute coefficient") {
    CHECK(parse_poly("1 3 1", Encoding::Full).height() == 3);
    CHECK(parse_poly("1 0 -1 -1", Encoding::Full).height() == 1);
    CHECK(parse_poly("1 -7 2", Encoding::Full).height() == 7);
}

}  // TEST_SUITE
