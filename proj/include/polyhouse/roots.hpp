// Certified numeric kernel: all complex roots with a-posteriori error disks,
// the house, the Mahler measure, and the count of roots outside the unit
// circle. The iteration is Aberth-Ehrlich; certification is independent of
// the iteration (Weierstrass residual disks with floating-error inflation),
// so a converged-looking but wrong configuration cannot certify.
#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polyhouse/poly.hpp"

namespace polyhouse {

struct CertifiedRoot {
    std::complex<double> z;
    double radius;  // the true root lies within this disk (union/counting sense)
};

struct RootSummary {
    double house = 0;
    double house_error = 0;
    int nu = 0;          // roots with |z| strictly > 1
    double mahler = 1;   // product of max(1, |root|)
    std::vector<CertifiedRoot> roots;
};

// Thrown when the iteration cannot certify radii <= tol even after escalating
// working precision. Never silently returns uncertified values.
struct RootCertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by count_outside_unit when a disk straddles |z| = 1 and the exact
// reciprocal-symmetry argument does not apply.
struct UnitCircleUndecidable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All roots with certified radii <= tol (degree >= 1, tol >= 1e-14).
std::vector<CertifiedRoot> all_roots(const IntPolynomial& p, double tol = 1e-13);

// (value, error): |value - true house| <= error.
std::pair<double, double> house(const IntPolynomial& p);

// Mahler measure of a monic p.
double mahler_measure(const IntPolynomial& p);

// Exact nu for square-free p. Reciprocal inputs use the z + 1/z transform
// (unit-circle roots counted by an exact Sturm chain); other inputs fall back
// to certified disks plus the gcd-with-reversal circle count.
int count_outside_unit(const IntPolynomial& p);

// house + mahler + nu + roots in one pass.
RootSummary analyze(const IntPolynomial& p, double tol = 1e-13);

struct CertifiedRealRoot {
    double value;
    double lo, hi;  // exact-sign bracket, hi - lo <= 1e-12
};

// If sign(P(lo)) * sign(P(hi)) < 0 (exact signs), bisect to width 1e-12.
// Endpoints are rationals lo = lo_num/lo_den, hi = hi_num/hi_den.
std::optional<CertifiedRealRoot> real_root_in_interval(const IntPolynomial& p,
                                                       long long lo_num, long long lo_den,
                                                       long long hi_num, long long hi_den);

}  // namespace polyhouse
