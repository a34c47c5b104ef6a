// Closed-form bounds and named constants; the three boundary-pattern lemmas
// used to discard search candidates whose house provably exceeds 3/2 or 2;
// the d = 5 (mod 6) family generator; nonprimitive composite-degree
// predictions; and the powerhouse statistic house^d. Constants are always
// recomputed from their defining polynomials, never trusted from literals.
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "polyhouse/poly.hpp"
#include "polyhouse/roots.hpp"

namespace polyhouse {

struct ConstantCatalog {
    double theta;  // real root of x^3 - x - 1 = 1.324717...
    double sigma;  // house of x^8+x^5+x^4+x^3+1 = 1.169283...
    double tau;    // house of x^10+x^8+x^7+x^5+x^3+x^2+1 = 1.125715...
    double U;      // ((3+sqrt 5)/2)^2 = 6.854102...
    IntPolynomial theta_poly, sigma_poly, tau_poly;

    // Computed once on first use, from the defining polynomials/expression.
    static const ConstantCatalog& get();
};

// exp(log(d+0.5)/d^2) in general; exp(3 log(d/2)/d^2) for reciprocal d >= 6.
// Throws std::invalid_argument for d < 2 or reciprocal with d < 6.
double matveev_lower_bound(int d, bool reciprocal);

enum class BoundKind { Theta32, Tau10, Sigma8 };

// theta^{3/(2d)}, tau^{10/d} or sigma^{8/d}.
double column_bound(int d, BoundKind kind);

// house_value^d; requires house_value >= 1, d >= 1.
double powerhouse(double house_value, int d);

// Partial sum of the series for T^{1/d}: sum_{k<terms} (log T)^k / (k! d^k).
// terms = 2 gives 1 + log(T)/d, the linear-in-1/d approximation.
double taylor_T_pow(double T, int d, int terms);

enum class LemmaId { Lemma1, Lemma2, Lemma3 };

struct LemmaPattern {
    LemmaId which;
    int m;  // Lemma1: 0 or 1; Lemma3: 1 or 2; Lemma2: unused (0)
    double guaranteed_lower_bound;  // 3/2 for Lemma1, 2 for Lemmas 2-3
};

// Strict template match on the full coefficient sequence:
//   Lemma1 (d >= 10, coeffs in {-1,0,1}):
//     x^d - x^{d-1} - x^{d-2} - x^{d-3} - m x^{d-4} + ... - m x^4 - x^3 - x^2 - x + 1
//   Lemma2 (d >= 6, coeffs in {-2..2}):
//     x^d - 2x^{d-1} - 2x^{d-2} + ... - 2x^2 - 2x + 1
//   Lemma3 (d >= 10, coeffs in {-2..2}):
//     x^d - 2x^{d-1} - x^{d-2} - m x^{d-3} + ... - m x^3 - x^2 - 2x + 1
// Interior coefficients are unconstrained within each alphabet. A match
// guarantees house(P) >= guaranteed_lower_bound.
std::optional<LemmaPattern> match_lemma_pattern(const IntPolynomial& p);

// Exact-sign bracketing per the lemma proofs: P(3/2) < 0 < P(2) for Lemma 1,
// P(2) < 0 < P(3) for Lemmas 2-3, then a certified root in the bracket.
// Throws std::logic_error if a sign condition fails (that would falsify the
// lemma, so the caller is expected to abort loudly).
CertifiedRealRoot verify_lemma_instance(const LemmaPattern& pat,
                                        const IntPolynomial& p);

// P_d(x) = (x^{d+2} - x^2 - 1)/(x^2 - x + 1) for d = 5 (mod 6); division is
// exact by construction (a nonzero remainder signals a bug and throws).
// The real root a_d in (1, 2^{1/d}) is the house, and a_d^d -> 2.
IntPolynomial generate_prime5mod6(int d);

// (x^{d+3} - x^{(d+3)/2} - x + 1)/((x-1)(x^2+1)) for odd d = 7 (mod 12).
// At d = 19 this is the degree-19 extremal minimal polynomial. The family
// does not generalize; this exists only as a negative-evidence generator,
// and it throws std::runtime_error when the division is not exact (which
// already happens at d = 31).
IntPolynomial failed_generalization_quotient(int d);

struct DivisorRecord {
    IntPolynomial poly;  // primitive extremal minimal polynomial of degree b
    double house;
};

struct CompositePrediction {
    IntPolynomial poly;      // record(x^{d/b}) for the winning divisor b
    double house;            // record_house^{b/d}
    int divisor;             // winning b (smallest on ties)
    std::vector<int> tied;   // all divisors within 1e-12 of the minimum
};

// Cheapest nonprimitive candidate of degree d built from divisor records:
// minimizes record_house^{b/d}, equivalently the powerhouse house^b(b), over
// proper divisors b (all b >= 1 in general; even b >= 2 for reciprocal).
// Throws std::invalid_argument if a required divisor record is missing.
// Records that are themselves nonprimitive are harmless: the powerhouse is
// invariant under composition, so ranking and ties are unaffected.
CompositePrediction composite_prediction(
    int d, const std::map<int, DivisorRecord>& known, bool reciprocal);

// (x^d - 2, 2^{1/d}) in general; (x^d + 3x^{d/2} + 1, U^{1/d}) for even d in
// the reciprocal case. Throws std::invalid_argument for reciprocal odd d.
std::pair<IntPolynomial, double> upper_bound_witness(int d, bool reciprocal);

}  // namespace polyhouse
