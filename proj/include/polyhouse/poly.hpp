// Exact integer-coefficient univariate polynomials: parsing, the palindromic
// half encoding, composition P(x^k), primitivity decomposition, and exact
// rational-point evaluation. Everything here is pure and allocation-light;
// these are the objects the search enumerates by the million.
#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace polyhouse {

using Coeff = long long;

// Coefficients ascending: c[0] is the constant term, c.back() the leading
// coefficient (never zero; the zero polynomial is not representable).
// External text formats are descending; conversion happens only at parse /
// format time.
struct IntPolynomial {
    std::vector<Coeff> c;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Coeff> ascending);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    Coeff height() const;
    bool monic() const { return !c.empty() && c.back() == 1; }

    bool operator==(const IntPolynomial&) const = default;
};

enum class Encoding { Full, Half };

// "Full": whitespace-separated integers, highest degree first.
// "Half": monic reciprocal shorthand for even degree d — the d/2+1 values
// from the coefficient of x^d (must be 1) down to the coefficient of x^{d/2};
// the lower half is filled in palindromically.
IntPolynomial parse_poly(const std::string& text, Encoding enc);
std::string format_poly(const IntPolynomial& p, Encoding enc);

// Even-degree monic palindromic polynomial, stored as its upper half.
struct HalfSpec {
    int degree = 0;                 // even, >= 2
    std::vector<Coeff> half;        // size degree/2 + 1, half[0] == 1

    IntPolynomial expand() const;
};

// Inverse of HalfSpec::expand; requires monic palindromic even degree.
HalfSpec half_from_poly(const IntPolynomial& p);

// x^d P(1/x) == P(x) coefficientwise.
bool is_reciprocal(const IntPolynomial& p);

// P(x^k); degree multiplies by k.
IntPolynomial compose_power(const IntPolynomial& p, int k);

// P(-x). For even-degree monic input the result is again monic; otherwise the
// sign is normalized so the leading coefficient keeps its original sign.
IntPolynomial negate_argument(const IntPolynomial& p);

// Largest k with P(x) = Q(x^k); k == 1 iff P is primitive.
std::pair<IntPolynomial, int> primitivity_decompose(const IntPolynomial& p);

// gmpxx lacks long long constructors on some platforms; route through here.
inline mpz_class to_mpz(long long v) {
    if (v >= std::numeric_limits<long>::min() &&
        v <= std::numeric_limits<long>::max())
        return mpz_class(static_cast<long>(v));
    mpz_class hi(static_cast<long>(v >> 32));
    mpz_class lo(static_cast<unsigned long>(
        static_cast<unsigned long long>(v) & 0xffffffffULL));
    return (hi << 32) + lo;
}

// den^degree * P(num/den), exactly. Sign of the result is sign of P(num/den).
mpz_class evaluate_exact(const IntPolynomial& p, const mpz_class& num,
                         const mpz_class& den);

// Exact sign of P(num/den) (den > 0): -1, 0, +1.
int sign_at(const IntPolynomial& p, long long num, long long den);

}  // namespace polyhouse
