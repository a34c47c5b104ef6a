// Exact polynomial arithmetic over Z and Q used by the certification and
// factorization layers: multiplication, division with remainder, gcd over Q,
// square-free tests, Sturm-chain real-root counting, the unit-circle
// transform w = z + 1/z, and the cyclotomic table. All results are exact;
// nothing here touches floating point.
#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "polyhouse/poly.hpp"

namespace polyhouse::zx {

using ZPoly = std::vector<mpz_class>;  // ascending, trailing (leading) entry nonzero
using QPoly = std::vector<mpq_class>;

ZPoly to_zpoly(const IntPolynomial& p);
// Fails (nullopt) if a coefficient exceeds the int64 range.
std::optional<IntPolynomial> to_int_poly(const ZPoly& p);

int degree(const ZPoly& p);  // -1 for the zero polynomial
void normalize(ZPoly& p);    // drop leading zeros

ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& p);
ZPoly reverse(const ZPoly& p);  // x^deg * p(1/x), normalized

// Division over Q returning integer results when exact; quotient/remainder
// satisfy a = q*b + r with deg r < deg b. Returns false if the exact
// quotient or remainder is not integral.
bool divrem_exact(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r);
// Convenience: exact divisibility test (remainder zero and quotient integral).
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);

mpz_class content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);  // content-free, positive leading coeff

// Monic gcd over Q, returned as a primitive integer polynomial.
ZPoly gcd_q(const ZPoly& a, const ZPoly& b);

bool is_square_free(const ZPoly& p);

mpz_class eval(const ZPoly& p, const mpz_class& x);

// Number of distinct real roots of p in the open interval (a, b); endpoints
// must not be roots. Exact (Sturm chain over Q).
int count_real_roots_open(const ZPoly& p, const mpq_class& a, const mpq_class& b);

// For a palindromic p of even degree 2n with p(1) != 0 != p(-1): the degree-n
// polynomial q with p(z)/z^n = q(z + 1/z). Unit-circle roots of p correspond
// two-to-one to real roots of q in (-2, 2).
ZPoly circle_transform(const ZPoly& p);

// Exact count of roots of p on |z| = 1 (p square-free). Handles roots at +-1
// and non-palindromic p (via gcd with the reversal).
int unit_circle_root_count(const ZPoly& p);

// n-th cyclotomic polynomial, cached.
const ZPoly& cyclotomic(int n);
// Euler phi, for deciding which cyclotomics can divide a given degree.
int euler_phi(int n);

}  // namespace polyhouse::zx
