// Exact classification gates: cyclotomic-product detection, factor finding
// with verified witnesses, and the combined minimal-polynomial gate.
#include <stdexcept>

#include "doctest.h"
#include "polyhouse/algebra.hpp"
#include "polyhouse/poly.hpp"

using namespace polyhouse;

namespace {
IntPolynomial full(const char* s) { return parse_poly(s, Encoding::Full); }
IntPolynomial half(const char* s) { return parse_poly(s, Encoding::Half); }
}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("root-of-unity detection on cyclotomic products") {
    CHECK(is_root_of_unity_poly(full("1 1")));        // Phi_1? no: x+1 = Phi_2
    CHECK(is_root_of_unity_poly(full("1 -1")));       // Phi_1
    CHECK(is_root_of_unity_poly(full("1 1 1")));      // Phi_3
    CHECK(is_root_of_unity_poly(full("1 0 1")));      // Phi_4
    CHECK(is_root_of_unity_poly(full("1 -1 1")));     // Phi_6
    CHECK(is_root_of_unity_poly(full("1 0 -1")));     // Phi_1 Phi_2
    CHECK(is_root_of_unity_poly(full("1 0 0 0 -1"))); // x^4 - 1
    CHECK_FALSE(is_root_of_unity_poly(full("1 3 1")));
    CHECK_FALSE(is_root_of_unity_poly(full("1 0 -1 -1")));
    CHECK_FALSE(is_root_of_unity_poly(half("1 1 0 -1 -1 -1")));
}

TEST_CASE("cyclotomic decomposition recovers indices with multiplicity") {
    CHECK(cyclotomic_decomposition(full("1 0 -1")) ==
          std::vector<int>{1, 2});
    CHECK(cyclotomic_decomposition(full("1 0 0 0 -1")) ==
          std::vector<int>{1, 2, 4});
    // (x^2 - x + 1)^2 = x^4 - 2x^3 + 3x^2 - 2x + 1
    CHECK(cyclotomic_decomposition(full("1 -2 3 -2 1")) ==
          std::vector<int>{6, 6});
    // x^6 - 1 = Phi_1 Phi_2 Phi_3 Phi_6
    CHECK(cyclotomic_decomposition(full("1 0 0 0 0 0 -1")) ==
          std::vector<int>{1, 2, 3, 6});
}

TEST_CASE("find_factor produces a verified proper factor") {
    // (x^2 + 3x + 1)(x^2 + x + 1) = x^4 + 4x^3 + 5x^2 + 4x + 1
    auto f = find_factor(full("1 4 5 4 1"));
    REQUIRE(f.has_value());
    CHECK(f->degree() >= 1);
    CHECK(f->degree() < 4);
    CHECK(f->monic());

    // Irreducible inputs yield nothing.
    CHECK_FALSE(find_factor(full("1 0 -1 -1")).has_value());
    CHECK_FALSE(find_factor(full("1 3 1")).has_value());
    CHECK_FALSE(find_factor(half("1 1 0 -1 -1 -1")).has_value());
}

TEST_CASE("find_factor handles squares and integer roots") {
    auto sq = find_factor(full("1 2 1"));  // (x+1)^2
    REQUIRE(sq.has_value());
    CHECK(*sq == full("1 1"));
    auto lin = find_factor(full("1 -2 -1 2"));  // (x-1)(x+1)(x-2)
    REQUIRE(lin.has_value());
    CHECK(lin->degree() < 3);
}

TEST_CASE("is_irreducible agrees with find_factor") {
    CHECK(is_irreducible(full("1 0 -1 -1")));
    CHECK(is_irreducible(full("1 3 1")));
    CHECK_FALSE(is_irreducible(full("1 4 5 4 1")));
    CHECK_FALSE(is_irreducible(full("1 0 -1")));
}

TEST_CASE("minimal_gate three-way verdict") {
    Classification c1 = minimal_gate(full("1 1 1"));
    CHECK(c1.kind == Kind::RootOfUnity);
    CHECK(c1.cyclotomic_indices == std::vector<int>{3});

    Classification c2 = minimal_gate(full("1 4 5 4 1"));
    CHECK(c2.kind == Kind::Reducible);
    REQUIRE(c2.factor.has_value());
    CHECK(c2.factor->degree() < 4);

    Classification c3 = minimal_gate(half("1 1 0 -1 -1 -1"));
    CHECK(c3.kind == Kind::Candidate);
    CHECK_FALSE(c3.factor.has_value());
}

TEST_CASE("minimal_gate accepts a house hint without changing the verdict") {
    IntPolynomial p = half("1 1 3");
    Classification plain = minimal_gate(p);
    Classification hinted = minimal_gate(p, 1.53922233842043);
    CHECK(plain.kind == Kind::Candidate);
    CHECK(hinted.kind == plain.kind);
}

TEST_CASE("palindromic products of two irreducible halves are caught") {
    // (x^3 + x^2 - 1)(x^3 - x - 1): reciprocal as a set, reducible over Z.
    IntPolynomial p = full("1 1 -1 -3 -1 1 1");
    CHECK(is_reciprocal(p));
    Classification c = minimal_gate(p);
    CHECK(c.kind == Kind::Reducible);
}

}  // TEST_SUITE
