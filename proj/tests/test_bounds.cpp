// Named constants, closed-form bound columns, the three boundary-pattern
// lemmas with certified-root verification, the d = 5 (mod 6) family, the
// composite-degree prediction, and the upper witnesses.
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "polyhouse/bounds.hpp"
#include "polyhouse/poly.hpp"
#include "polyhouse/roots.hpp"

using namespace polyhouse;

namespace {
IntPolynomial full(const char* s) { return parse_poly(s, Encoding::Full); }
}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("constants recomputed from their defining polynomials") {
    const ConstantCatalog& c = ConstantCatalog::get();
    CHECK(c.theta == doctest::Approx(1.32471795724475).epsilon(1e-12));
    CHECK(c.sigma == doctest::Approx(1.16928302978955).epsilon(1e-12));
    CHECK(c.tau == doctest::Approx(1.12571482154239).epsilon(1e-12));
    double u = std::pow((3.0 + std::sqrt(5.0)) / 2.0, 2);
    CHECK(c.U == doctest::Approx(u).epsilon(1e-14));
    CHECK(c.theta_poly == full("1 0 -1 -1"));
    CHECK(c.sigma_poly == full("1 0 0 1 1 1 0 0 1"));
    CHECK(c.tau_poly == full("1 0 1 1 0 1 0 1 1 0 1"));
    CHECK(house(c.theta_poly).first == doctest::Approx(c.theta).epsilon(1e-14));
}

TEST_CASE("matveev lower bound closed forms and domain") {
    CHECK(matveev_lower_bound(10, false) ==
          doctest::Approx(std::exp(std::log(10.5) / 100.0)).epsilon(1e-15));
    CHECK(matveev_lower_bound(10, true) ==
          doctest::Approx(std::exp(3.0 * std::log(5.0) / 100.0))
              .epsilon(1e-15));
    CHECK_THROWS_AS(matveev_lower_bound(1, false), std::invalid_argument);
    CHECK_THROWS_AS(matveev_lower_bound(4, true), std::invalid_argument);
}

TEST_CASE("column bounds are the advertised powers") {
    const ConstantCatalog& c = ConstantCatalog::get();
    CHECK(column_bound(2, BoundKind::Theta32) ==
          doctest::Approx(std::pow(c.theta, 0.75)).epsilon(1e-15));
    CHECK(column_bound(10, BoundKind::Tau10) ==
          doctest::Approx(c.tau).epsilon(1e-15));
    CHECK(column_bound(8, BoundKind::Sigma8) ==
          doctest::Approx(c.sigma).epsilon(1e-15));
    CHECK_THROWS_AS(column_bound(0, BoundKind::Theta32),
                    std::invalid_argument);
}

TEST_CASE("powerhouse is pow with a guarded domain") {
    CHECK(powerhouse(1.05, 20) ==
          doctest::Approx(std::pow(1.05, 20)).epsilon(1e-15));
    CHECK(powerhouse(1.0, 7) == doctest::Approx(1.0));
    CHECK_THROWS_AS(powerhouse(0.99, 3), std::invalid_argument);
    CHECK_THROWS_AS(powerhouse(1.1, 0), std::invalid_argument);
}

TEST_CASE("taylor partial sums converge to T^(1/d)") {
    CHECK(taylor_T_pow(2.0, 10, 2) ==
          doctest::Approx(1.0 + std::log(2.0) / 10.0).epsilon(1e-15));
    CHECK(taylor_T_pow(2.0, 10, 30) ==
          doctest::Approx(std::pow(2.0, 0.1)).epsilon(1e-13));
    CHECK(taylor_T_pow(6.854101966, 12, 40) ==
          doctest::Approx(std::pow(6.854101966, 1.0 / 12)).epsilon(1e-13));
}

TEST_CASE("lemma pattern 1 matches and certifies a root in (3/2, 2)") {
    // d = 10, m = 0, the single interior coefficient set to 0.
    IntPolynomial p = full("1 -1 -1 -1 0 0 0 -1 -1 -1 1");
    auto pat = match_lemma_pattern(p);
    REQUIRE(pat.has_value());
    CHECK(pat->which == LemmaId::Lemma1);
    CHECK(pat->m == 0);
    CHECK(pat->guaranteed_lower_bound == doctest::Approx(1.5));
    CertifiedRealRoot r = verify_lemma_instance(*pat, p);
    CHECK(r.value > 1.5);
    CHECK(r.value < 2.0);
    CHECK(house(p).first >= r.value - 1e-9);
}

TEST_CASE("lemma pattern 2 matches and certifies a root in (2, 3)") {
    // d = 8, palindromic interior {1, -2, 1}.
    IntPolynomial p = full("1 -2 -2 1 -2 1 -2 -2 1");
    auto pat = match_lemma_pattern(p);
    REQUIRE(pat.has_value());
    CHECK(pat->which == LemmaId::Lemma2);
    CHECK(pat->guaranteed_lower_bound == doctest::Approx(2.0));
    CertifiedRealRoot r = verify_lemma_instance(*pat, p);
    CHECK(r.value > 2.0);
    CHECK(r.value < 3.0);
}

TEST_CASE("lemma pattern 3 matches for m in {1, 2}") {
    for (int m : {1, 2}) {
        // d = 10: 1 -2 -1 -m i j i -m -1 -2 1 with palindromic interior 2 0 2.
        std::string s = "1 -2 -1 -" + std::to_string(m) + " 2 0 2 -" +
                        std::to_string(m) + " -1 -2 1";
        IntPolynomial p = parse_poly(s, Encoding::Full);
        auto pat = match_lemma_pattern(p);
        REQUIRE(pat.has_value());
        CHECK(pat->which == LemmaId::Lemma3);
        CHECK(pat->m == m);
        CertifiedRealRoot r = verify_lemma_instance(*pat, p);
        CHECK(r.value > 2.0);
        CHECK(r.value < 3.0);
    }
}

TEST_CASE("non-matching polynomials yield no pattern") {
    CHECK_FALSE(match_lemma_pattern(full("1 3 1")).has_value());
    CHECK_FALSE(match_lemma_pattern(
                    parse_poly("1 1 0 -1 -1 -1", Encoding::Half))
                    .has_value());
    // Out-of-alphabet coefficient in an otherwise lemma-1 shape.
    CHECK_FALSE(
        match_lemma_pattern(full("1 -1 -1 -1 0 2 0 -1 -1 -1 1")).has_value());
}

TEST_CASE("degree 5 family member comes out of the exact division") {
    IntPolynomial p = generate_prime5mod6(5);
    CHECK(p == full("1 1 0 -1 -1 -1"));
    auto [h, err] = house(p);
    CHECK(h > 1.0);
    CHECK(h < std::pow(2.0, 0.2));
    CHECK(err < 1e-12);
    CHECK_THROWS_AS(generate_prime5mod6(4), std::invalid_argument);
    CHECK_THROWS_AS(generate_prime5mod6(7), std::invalid_argument);
}

TEST_CASE("family powerhouse increases toward 2") {
    double prev = 0.0;
    for (int d : {5, 11, 17, 23}) {
        IntPolynomial p = generate_prime5mod6(d);
        CHECK(p.degree() == d);
        double h = house(p).first;
        CHECK(h > 1.0);
        CHECK(h < std::pow(2.0, 1.0 / d));
        double ph = powerhouse(h, d);
        CHECK(ph > prev);
        CHECK(ph < 2.0);
        prev = ph;
    }
}

TEST_CASE("failed generalization: works at 19, breaks at 31") {
    IntPolynomial p = failed_generalization_quotient(19);
    CHECK(p.degree() == 19);
    CHECK(house(p).first == doctest::Approx(1.03641032830786).epsilon(1e-12));
    // The house does NOT exceed 2^(1/19); the family is not a witness there.
    CHECK(house(p).first < std::pow(2.0, 1.0 / 19));
    CHECK_THROWS_AS(failed_generalization_quotient(31), std::runtime_error);
    CHECK_THROWS_AS(failed_generalization_quotient(17),
                    std::invalid_argument);
}

TEST_CASE("composite prediction picks the cheapest divisor powerhouse") {
    std::map<int, DivisorRecord> known;
    known[2] = DivisorRecord{full("1 3 1"), house(full("1 3 1")).first};
    IntPolynomial r4 = parse_poly("1 1 3", Encoding::Half);
    known[4] = DivisorRecord{r4, house(r4).first};

    CompositePrediction pred = composite_prediction(8, known, true);
    CHECK(pred.divisor == 4);
    CHECK(pred.house == doctest::Approx(1.24065399625376).epsilon(1e-12));
    CHECK(pred.poly == compose_power(r4, 2));
    CHECK(pred.tied == std::vector<int>{4});

    // An odd divisor record is ignored in the reciprocal case.
    known[1] = DivisorRecord{full("1 -2"), 2.0};
    CompositePrediction again = composite_prediction(8, known, true);
    CHECK(again.divisor == 4);

    // In the general case the odd divisor wins: 2^(1/4) < phi^2^(1/2).
    CompositePrediction gen = composite_prediction(4, known, false);
    CHECK(gen.divisor == 1);
    CHECK(gen.house == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-12));
    CHECK(gen.poly == full("1 0 0 0 -2"));

    std::map<int, DivisorRecord> missing;
    missing[2] = known[2];
    CHECK_THROWS_AS(composite_prediction(8, missing, true),
                    std::invalid_argument);
}

TEST_CASE("upper witnesses and their exact-form houses") {
    auto [wr, hr] = upper_bound_witness(10, true);
    CHECK(wr == full("1 0 0 0 0 3 0 0 0 0 1"));
    CHECK(hr == doctest::Approx(std::pow(ConstantCatalog::get().U, 0.1))
                    .epsilon(1e-14));
    CHECK(house(wr).first == doctest::Approx(hr).epsilon(1e-12));

    auto [wg, hg] = upper_bound_witness(7, false);
    CHECK(wg == full("1 0 0 0 0 0 0 -2"));
    CHECK(hg == doctest::Approx(std::pow(2.0, 1.0 / 7)).epsilon(1e-14));
    CHECK_THROWS_AS(upper_bound_witness(7, true), std::invalid_argument);
}

TEST_CASE("sigma column dominates the reciprocal lower bound at powers of 2") {
    for (int k = 3; k <= 20; ++k) {
        int d = 1 << k;
        CHECK(column_bound(d, BoundKind::Sigma8) >
              matveev_lower_bound(d, true));
        CHECK((std::uint64_t{1} << (k + 3)) >
              std::uint64_t(15) * std::uint64_t(k - 1));
    }
}

}  // TEST_SUITE
