#include "polyhouse/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polyhouse/zpoly.hpp"

namespace polyhouse {

namespace {

// ------------------------------------------------------------------ Aberth

// One full engine instantiation per floating type; long double is the
// escalation path when double cannot certify the requested radius.
template <typename FT>
struct AberthEngine {
    using CT = std::complex<FT>;

    std::vector<FT> a;   // monic-normalized coefficients, ascending
    int n;

    explicit AberthEngine(const IntPolynomial& p) : n(p.degree()) {
        a.resize(n + 1);
        FT lead = static_cast<FT>(p.c.back());
        for (int i = 0; i <= n; ++i) a[i] = static_cast<FT>(p.c[i]) / lead;
    }

    // P(z) and P'(z) by Horner, plus a running bound on the evaluation error
    // of P(z): |fl(P(z)) - P(z)| <= 2n*eps * sum |a_i| |z|^i.
    void eval(const CT& z, CT& pz, CT& dpz, FT& abs_sum) const {
        pz = a[n];
        dpz = FT(0);
        abs_sum = std::abs(a[n]);
        FT az = std::abs(z);
        for (int i = n - 1; i >= 0; --i) {
            dpz = dpz * z + pz;
            pz = pz * z + a[i];
            abs_sum = abs_sum * az + std::abs(a[i]);
        }
    }

    // Initial guesses on circles whose radii come from the upper convex hull
    // of (i, log|a_i|) — the standard Newton-polygon estimate, robust when
    // root moduli span several scales.
    std::vector<CT> initial_guesses() const {
        std::vector<double> lg(n + 1);
        for (int i = 0; i <= n; ++i) {
            double m = std::abs(static_cast<double>(a[i]));
            lg[i] = m > 0 ? std::log(m) : -1e30;
        }
        // Upper convex hull indices.
        std::vector<int> hull;
        for (int i = 0; i <= n; ++i) {
            while (hull.size() >= 2) {
                int j = hull[hull.size() - 1], k = hull[hull.size() - 2];
                if ((lg[i] - lg[k]) * (j - k) >= (lg[j] - lg[k]) * (i - k))
                    hull.pop_back();
                else
                    break;
            }
            hull.push_back(i);
        }
        std::vector<CT> z;
        z.reserve(n);
        const double golden = 2.0 * std::numbers::pi * 0.3819660112501051;
        int placed = 0;
        for (size_t h = 0; h + 1 < hull.size(); ++h) {
            int i = hull[h], j = hull[h + 1];
            double r = std::exp((lg[i] - lg[j]) / (j - i));
            for (int t = 0; t < j - i; ++t) {
                // A golden-angle spiral with a small radial stagger breaks the
                // symmetry of palindromic inputs (whose root sets are closed
                // under z -> 1/z and conjugation).
                double ang = golden * (placed + 1) + 0.31;
                double rr = r * (1.0 + 0.05 * ((placed % 3) - 1));
                z.push_back(CT(static_cast<FT>(rr * std::cos(ang)),
                               static_cast<FT>(rr * std::sin(ang))));
                ++placed;
            }
        }
        while (placed < n) {  // defensive; hull covers all gaps in exact arithmetic
            double ang = golden * (placed + 1) + 0.31;
            z.push_back(CT(static_cast<FT>(std::cos(ang)), static_cast<FT>(std::sin(ang))));
            ++placed;
        }
        return z;
    }

    // Simultaneous iteration; returns false if the budget is exhausted before
    // the corrections fall below the floating floor.
    bool iterate(std::vector<CT>& z) const {
        const int budget = 200 * n;
        const FT eps = std::numeric_limits<FT>::epsilon();
        for (int it = 0; it < budget; ++it) {
            FT worst = 0;
            for (int i = 0; i < n; ++i) {
                CT pz, dpz;
                FT abs_sum;
                eval(z[i], pz, dpz, abs_sum);
                if (std::abs(pz) <= 4 * n * eps * abs_sum) continue;  // at the floor
                CT newton = dpz == CT(0) ? CT(0) : pz / dpz;
                CT sum = 0;
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    CT d = z[i] - z[j];
                    if (d == CT(0)) d = CT(eps * (i + 1), eps);  // split collisions
                    sum += FT(1) / d;
                }
                CT denom = CT(1) - newton * sum;
                CT corr = denom == CT(0) ? newton : newton / denom;
                z[i] -= corr;
                FT rel = std::abs(corr) / std::max(FT(1), std::abs(z[i]));
                worst = std::max(worst, rel);
            }
            if (worst <= 8 * eps) return true;
        }
        return false;
    }

    // A-posteriori Weierstrass disks: all roots lie in the union of disks
    // D(z_i, n |W_i|) with W_i = P(z_i) / prod_{j != i} (z_i - z_j), and any
    // connected component of k disks contains exactly k roots. The numerator
    // is inflated by the Horner error bound, the denominator by its own
    // rounding bound, so the radii stay valid in floating point.
    std::vector<FT> certify(const std::vector<CT>& z) const {
        const FT eps = std::numeric_limits<FT>::epsilon();
        std::vector<FT> rad(n);
        for (int i = 0; i < n; ++i) {
            CT pz, dpz;
            FT abs_sum;
            eval(z[i], pz, dpz, abs_sum);
            FT num = std::abs(pz) + 2 * n * eps * abs_sum;
            FT den = 1;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                den *= std::abs(z[i] - z[j]);
            }
            den *= (FT(1) - 4 * n * eps);
            rad[i] = den > 0 ? static_cast<FT>(n) * num / den
                             : std::numeric_limits<FT>::infinity();
        }
        return rad;
    }

    bool solve(std::vector<CT>& z, std::vector<FT>& rad, FT tol) const {
        z = initial_guesses();
        if (!iterate(z)) return false;
        rad = certify(z);
        for (FT r : rad)
            if (!(r <= tol)) return false;
        return true;
    }
};

std::vector<CertifiedRoot> strip_zero_roots(const IntPolynomial& p, IntPolynomial& rest) {
    size_t k = 0;
    while (k < p.c.size() - 1 && p.c[k] == 0) ++k;
    rest = IntPolynomial(std::vector<Coeff>(p.c.begin() + k, p.c.end()));
    return std::vector<CertifiedRoot>(k, CertifiedRoot{{0.0, 0.0}, 0.0});
}

}  // namespace

std::vector<CertifiedRoot> all_roots(const IntPolynomial& p, double tol) {
    if (p.degree() < 1) throw std::invalid_argument("all_roots needs degree >= 1");
    if (tol < 1e-14) throw std::invalid_argument("tol must be >= 1e-14");

    // Exact roots at 0 come off first; they'd otherwise stall the iteration's
    // reciprocal-style initial guesses.
    IntPolynomial q;
    std::vector<CertifiedRoot> out = strip_zero_roots(p, q);
    if (q.degree() == 0) return out;

    {
        AberthEngine<double> eng(q);
        std::vector<std::complex<double>> z;
        std::vector<double> rad;
        if (eng.solve(z, rad, tol)) {
            for (int i = 0; i < eng.n; ++i) out.push_back({z[i], rad[i]});
            return out;
        }
    }
    // Escalate once to long double, then report rather than lie.
    AberthEngine<long double> eng(q);
    std::vector<std::complex<long double>> z;
    std::vector<long double> rad;
    if (eng.solve(z, rad, static_cast<long double>(tol))) {
        for (int i = 0; i < eng.n; ++i) {
            std::complex<double> zd(static_cast<double>(z[i].real()),
                                    static_cast<double>(z[i].imag()));
            // absorb the long double -> double cast into the radius
            double r = static_cast<double>(rad[i]) + 4e-16 * (1.0 + std::abs(zd));
            out.push_back({zd, r});
        }
        return out;
    }
    throw RootCertificationError(
        "root certification failed at tol=" + std::to_string(tol) +
        " (degree " + std::to_string(p.degree()) + "); the input may have multiple roots");
}

std::pair<double, double> house(const IntPolynomial& p) {
    if (p.degree() < 1) throw std::invalid_argument("house needs degree >= 1");
    std::vector<CertifiedRoot> roots = all_roots(p);
    double best = 0, err = 0;
    for (const CertifiedRoot& r : roots) best = std::max(best, std::abs(r.z));
    // The true house lies in [max(|z|-rad), max(|z|+rad)].
    double lo = 0, hi = 0;
    for (const CertifiedRoot& r : roots) {
        lo = std::max(lo, std::abs(r.z) - r.radius);
        hi = std::max(hi, std::abs(r.z) + r.radius);
    }
    err = std::max(best - lo, hi - best);
    return {best, err};
}

double mahler_measure(const IntPolynomial& p) {
    if (p.degree() < 1) throw std::invalid_argument("mahler_measure needs degree >= 1");
    if (!p.monic()) throw std::invalid_argument("mahler_measure needs a monic polynomial");
    double m = 1;
    for (const CertifiedRoot& r : all_roots(p)) m *= std::max(1.0, std::abs(r.z));
    return m;
}

namespace {

int nu_from_disks_or_throw(const std::vector<CertifiedRoot>& roots) {
    int nu = 0;
    for (const CertifiedRoot& r : roots) {
        double m = std::abs(r.z);
        if (m - r.radius > 1.0)
            ++nu;
        else if (m + r.radius >= 1.0)
            throw UnitCircleUndecidable("a root disk straddles |z| = 1");
    }
    return nu;
}

}  // namespace

int count_outside_unit(const IntPolynomial& p) {
    if (p.degree() < 1) throw std::invalid_argument("count_outside_unit needs degree >= 1");
    zx::ZPoly zp = zx::to_zpoly(p);
    if (!zx::is_square_free(zp))
        throw std::invalid_argument("count_outside_unit needs a square-free polynomial");

    int d = p.degree();
    if (is_reciprocal(p) && d % 2 == 0) {
        // Exact: unit-circle roots via the w = z + 1/z transform; the rest
        // pair up as (z, 1/z) with exactly one of each pair outside.
        int on_circle = zx::unit_circle_root_count(zp);
        return (d - on_circle) / 2;
    }

    int on_circle = zx::unit_circle_root_count(zp);
    try {
        std::vector<CertifiedRoot> roots = all_roots(p);
        if (on_circle == 0) return nu_from_disks_or_throw(roots);
        // Split off the reciprocal part (which holds every circle root) and
        // count its outside roots by symmetry; the remainder has no circle
        // roots, so disks decide it.
        zx::ZPoly g = zx::gcd_q(zp, zx::reverse(zp));
        int dg = zx::degree(g);
        int outside_g = (dg - on_circle) / 2;
        zx::ZPoly rest = *zx::divide_exact(zp, g);
        auto rest_int = zx::to_int_poly(rest);
        if (!rest_int) throw UnitCircleUndecidable("reciprocal cofactor exceeds int64");
        if (rest_int->degree() == 0) return outside_g;
        return outside_g + nu_from_disks_or_throw(all_roots(*rest_int));
    } catch (const RootCertificationError& e) {
        throw UnitCircleUndecidable(e.what());
    }
}

RootSummary analyze(const IntPolynomial& p, double tol) {
    RootSummary s;
    s.roots = all_roots(p, tol);
    double lo = 0, hi = 0;
    for (const CertifiedRoot& r : s.roots) {
        double m = std::abs(r.z);
        s.house = std::max(s.house, m);
        lo = std::max(lo, m - r.radius);
        hi = std::max(hi, m + r.radius);
        s.mahler *= std::max(1.0, m);
    }
    s.house_error = std::max(s.house - lo, hi - s.house);
    s.nu = count_outside_unit(p);
    return s;
}

std::optional<CertifiedRealRoot> real_root_in_interval(const IntPolynomial& p,
                                                       long long lo_num, long long lo_den,
                                                       long long hi_num, long long hi_den) {
    if (lo_den <= 0 || hi_den <= 0) throw std::invalid_argument("denominators must be positive");
    mpq_class lo(to_mpz(lo_num), to_mpz(lo_den)), hi(to_mpz(hi_num), to_mpz(hi_den));
    lo.canonicalize();
    hi.canonicalize();
    if (!(lo < hi)) throw std::invalid_argument("need lo < hi");

    zx::ZPoly zp = zx::to_zpoly(p);
    auto sign_q = [&zp](const mpq_class& x) {
        // sign of den^deg * P(num/den)
        mpz_class num = x.get_num(), den = x.get_den();
        mpz_class acc = zp.back(), dpow = 1;
        for (int i = static_cast<int>(zp.size()) - 2; i >= 0; --i) {
            dpow *= den;
            acc = acc * num + zp[i] * dpow;
        }
        return sgn(acc);
    };

    int slo = sign_q(lo), shi = sign_q(hi);
    if (slo == 0) return CertifiedRealRoot{lo.get_d(), lo.get_d(), lo.get_d()};
    if (shi == 0) return CertifiedRealRoot{hi.get_d(), hi.get_d(), hi.get_d()};
    if (slo * shi > 0) return std::nullopt;

    const mpq_class width_limit(mpz_class(1), to_mpz(1000000000000LL));
    while (mpq_class(hi - lo) > width_limit) {
        mpq_class mid = (lo + hi) / 2;
        int sm = sign_q(mid);
        if (sm == 0) return CertifiedRealRoot{mid.get_d(), mid.get_d(), mid.get_d()};
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return CertifiedRealRoot{mpq_class((lo + hi) / 2).get_d(), lo.get_d(), hi.get_d()};
}

}  // namespace polyhouse
