#include "polyhouse/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <set>
#include <stdexcept>

#include "polyhouse/roots.hpp"
#include "polyhouse/zpoly.hpp"

namespace polyhouse {
namespace {

using zx::ZPoly;

void require_monic(const IntPolynomial& p, const char* who) {
    if (p.degree() < 1 || !p.monic())
        throw std::invalid_argument(std::string(who) +
                                    ": requires a monic polynomial of degree >= 1");
}

// q with q(x^2) = (-1)^n p(x) p(-x); the roots of q are the squares of the
// roots of p, and q is again monic integer of the same degree.
ZPoly graeffe_step(const ZPoly& p) {
    ZPoly flip(p);
    for (std::size_t i = 1; i < flip.size(); i += 2) flip[i] = -flip[i];
    ZPoly r = zx::mul(p, flip);
    const int n = zx::degree(p);
    ZPoly q(static_cast<std::size_t>(n) + 1);
    const bool negate = (n % 2) != 0;
    for (int k = 0; k <= n; ++k) {
        q[static_cast<std::size_t>(k)] = r[static_cast<std::size_t>(2 * k)];
        if (negate) q[static_cast<std::size_t>(k)] = -q[static_cast<std::size_t>(k)];
    }
    return q;
}

std::vector<mpz_class> binomial_row(int n) {
    std::vector<mpz_class> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1;
    for (int k = 1; k <= n; ++k)
        b[static_cast<std::size_t>(k)] =
            b[static_cast<std::size_t>(k - 1)] * (n - k + 1) / k;
    return b;
}

// If all roots lie on the unit circle, |a_k| <= C(n, k); a violation
// certifies a root off the circle.
bool within_circle_bound(const ZPoly& p, const std::vector<mpz_class>& binom) {
    for (std::size_t k = 0; k < p.size(); ++k)
        if (abs(p[k]) > binom[k]) return false;
    return true;
}

std::complex<double> eval_at(const IntPolynomial& p, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * z + static_cast<double>(p.c[static_cast<std::size_t>(i)]);
    return acc;
}

struct RootAtom {
    int deg;                          // 1 (real root) or 2 (conjugate pair)
    long double trace;                // sum of the atom's roots (real)
    std::complex<long double> prod;   // product of the atom's roots
    long double quad_b, quad_c;       // deg 2: x^2 + quad_b x + quad_c
    long double lin_c;                // deg 1: x + lin_c
};

std::vector<RootAtom> build_atoms(const std::vector<CertifiedRoot>& roots) {
    const std::size_t n = roots.size();
    std::vector<bool> used(n, false);
    std::vector<RootAtom> atoms;
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        used[i] = true;
        const std::complex<double> zi = roots[i].z;
        if (std::abs(zi.imag()) <= 1e-9) {
            RootAtom a;
            a.deg = 1;
            a.trace = zi.real();
            a.prod = std::complex<long double>(zi.real(), 0.0L);
            a.lin_c = -static_cast<long double>(zi.real());
            a.quad_b = a.quad_c = 0;
            atoms.push_back(a);
            continue;
        }
        const std::complex<double> target = std::conj(zi);
        std::size_t best = n;
        double best_dist = 1e300;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            double dist = std::abs(roots[j].z - target);
            if (dist < best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        RootAtom a;
        if (best < n && best_dist <= 1e-6) {
            used[best] = true;
            const std::complex<double> zj = roots[best].z;
            a.deg = 2;
            a.trace = static_cast<long double>(zi.real()) + zj.real();
            a.prod = std::complex<long double>(zi.real(), zi.imag()) *
                     std::complex<long double>(zj.real(), zj.imag());
            a.quad_b = -a.trace;
            a.quad_c = a.prod.real();
            a.lin_c = 0;
        } else {
            // No conjugate partner found; keep a singleton so soundness is
            // preserved (any subset using it fails the integrality gates).
            a.deg = 1;
            a.trace = zi.real();
            a.prod = std::complex<long double>(zi.real(), zi.imag());
            a.lin_c = -static_cast<long double>(zi.real());
            a.quad_b = a.quad_c = 0;
        }
        atoms.push_back(a);
    }
    return atoms;
}

bool near_integer(long double v, long long& out) {
    if (std::abs(v) > 9e15L) return false;
    long double r = std::floor(v + 0.5L);
    if (std::abs(v - r) > 1e-4L) return false;
    out = static_cast<long long>(r);
    return true;
}

// Multiply out the subset's linear/quadratic factors; coefficients ascending,
// leading coefficient exactly 1.
std::vector<long double> subset_product(const std::vector<RootAtom>& atoms,
                                        unsigned mask, int k) {
    std::vector<long double> acc(static_cast<std::size_t>(k) + 1, 0.0L);
    acc[0] = 1.0L;
    int deg = 0;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        if (!(mask & (1u << a))) continue;
        const RootAtom& at = atoms[a];
        if (at.deg == 1) {
            for (int i = deg; i >= 0; --i) {
                acc[static_cast<std::size_t>(i + 1)] += acc[static_cast<std::size_t>(i)];
                acc[static_cast<std::size_t>(i)] *= at.lin_c;
            }
            deg += 1;
        } else {
            for (int i = deg; i >= 0; --i) {
                long double v = acc[static_cast<std::size_t>(i)];
                acc[static_cast<std::size_t>(i + 2)] += v;
                acc[static_cast<std::size_t>(i + 1)] += v * at.quad_b;
                acc[static_cast<std::size_t>(i)] = v * at.quad_c;
            }
            deg += 2;
        }
    }
    return acc;
}

std::optional<IntPolynomial> factor_from_root_clusters(const IntPolynomial& p,
                                                       const ZPoly& zp) {
    const int d = p.degree();
    std::vector<CertifiedRoot> roots = all_roots(p);
    std::vector<RootAtom> atoms = build_atoms(roots);
    const int m = static_cast<int>(atoms.size());
    if (m > 26)
        throw std::runtime_error(
            "find_factor: too many root clusters for subset reconstruction");
    const long long a0 = p.c[0];

    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        int k = 0;
        long double trace = 0.0L;
        for (int a = 0; a < m; ++a)
            if (mask & (1u << a)) {
                k += atoms[static_cast<std::size_t>(a)].deg;
                trace += atoms[static_cast<std::size_t>(a)].trace;
            }
        if (k > d / 2) continue;

        long long trace_ll;
        if (!near_integer(trace, trace_ll)) continue;

        std::complex<long double> prod(1.0L, 0.0L);
        for (int a = 0; a < m; ++a)
            if (mask & (1u << a)) prod *= atoms[static_cast<std::size_t>(a)].prod;
        if (std::abs(prod.imag()) > 1e-4L) continue;
        long double const_val = (k % 2 != 0) ? -prod.real() : prod.real();
        long long c0;
        if (!near_integer(const_val, c0)) continue;
        if (c0 == 0) continue;  // a zero root would have been peeled already
        if (a0 % c0 != 0) continue;

        std::vector<long double> coeffs = subset_product(atoms, mask, k);
        std::vector<Coeff> rounded(static_cast<std::size_t>(k) + 1);
        bool ok = true;
        for (int i = 0; i <= k && ok; ++i) {
            long long v;
            ok = near_integer(coeffs[static_cast<std::size_t>(i)], v);
            if (ok) rounded[static_cast<std::size_t>(i)] = v;
        }
        if (!ok || rounded[static_cast<std::size_t>(k)] != 1) continue;

        IntPolynomial cand(std::move(rounded));
        if (zx::divide_exact(zp, zx::to_zpoly(cand))) return cand;
    }
    return std::nullopt;
}

}  // namespace

bool is_root_of_unity_poly(const IntPolynomial& p,
                           std::optional<double> house_hint) {
    require_monic(p, "is_root_of_unity_poly");
    if (house_hint && *house_hint > 1.0 + 1e-8) return false;

    const long long a0 = p.c[0];
    if (a0 != 1 && a0 != -1) return false;  // |prod roots| must be 1

    const int n = p.degree();
    const std::vector<mpz_class> binom = binomial_row(n);
    ZPoly cur = zx::to_zpoly(p);
    if (!within_circle_bound(cur, binom)) return false;

    std::set<ZPoly> seen;
    seen.insert(cur);
    for (int iter = 0; iter < 1000; ++iter) {
        cur = graeffe_step(cur);
        if (!within_circle_bound(cur, binom)) return false;
        if (!seen.insert(cur).second) return true;  // orbit cycled
    }
    throw std::runtime_error(
        "is_root_of_unity_poly: root-squaring orbit failed to resolve");
}

std::vector<int> cyclotomic_decomposition(const IntPolynomial& p) {
    require_monic(p, "cyclotomic_decomposition");
    ZPoly cur = zx::to_zpoly(p);
    std::vector<int> indices;
    const int limit = 2 * p.degree() * p.degree() + 1;
    for (int n = 1; n <= limit && zx::degree(cur) > 0; ++n) {
        if (zx::euler_phi(n) > zx::degree(cur)) continue;
        while (true) {
            auto q = zx::divide_exact(cur, zx::cyclotomic(n));
            if (!q) break;
            indices.push_back(n);
            cur = *q;
            if (zx::degree(cur) == 0) break;
        }
    }
    if (zx::degree(cur) != 0 || cur[0] != 1)
        throw std::runtime_error(
            "cyclotomic_decomposition: input is not a cyclotomic product");
    return indices;
}

std::optional<IntPolynomial> find_factor(const IntPolynomial& p) {
    if (p.degree() <= 1) return std::nullopt;
    require_monic(p, "find_factor");
    ZPoly zp = zx::to_zpoly(p);

    // Repeated roots: gcd(P, P') is a proper factor.
    ZPoly g = zx::gcd_q(zp, zx::derivative(zp));
    if (zx::degree(g) >= 1) {
        auto f = zx::to_int_poly(g);
        if (!f) throw std::runtime_error("find_factor: square-free part overflow");
        return *f;
    }

    // Integer roots (monic: any rational root is an integer dividing a0).
    const long long a0 = p.c[0];
    if (a0 == 0) return IntPolynomial{{0, 1}};
    const long long abs_a0 = std::llabs(a0);
    if (abs_a0 <= 1000000) {
        for (long long r = 1; r <= abs_a0; ++r) {
            if (abs_a0 % r != 0) continue;
            if (sign_at(p, r, 1) == 0) return IntPolynomial{{-r, 1}};
            if (sign_at(p, -r, 1) == 0) return IntPolynomial{{r, 1}};
        }
    }

    // Cyclotomic peeling: phi(n) <= d forces n <= 2 d^2; a cheap numeric
    // evaluation at a primitive n-th root of unity filters before the exact
    // division. If P itself is cyclotomic it is irreducible.
    const int d = p.degree();
    double scale = 0;
    for (Coeff c : p.c) scale += std::abs(static_cast<double>(c));
    for (int n = 1; n <= 2 * d * d; ++n) {
        const int phi = zx::euler_phi(n);
        if (phi > d) continue;
        std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / n);
        if (std::abs(eval_at(p, z)) > 1e-6 * scale) continue;
        if (phi == d) {
            if (zp == zx::cyclotomic(n)) return std::nullopt;
            continue;
        }
        if (zx::divide_exact(zp, zx::cyclotomic(n))) {
            auto f = zx::to_int_poly(zx::cyclotomic(n));
            if (f) return *f;
        }
    }

    return factor_from_root_clusters(p, zp);
}

bool is_irreducible(const IntPolynomial& p) {
    if (p.degree() < 1) return false;
    require_monic(p, "is_irreducible");
    return !find_factor(p).has_value();
}

Classification minimal_gate(const IntPolynomial& p,
                            std::optional<double> house_hint) {
    require_monic(p, "minimal_gate");
    Classification out;
    if (is_root_of_unity_poly(p, house_hint)) {
        out.kind = Kind::RootOfUnity;
        out.cyclotomic_indices = cyclotomic_decomposition(p);
        return out;
    }
    if (auto f = find_factor(p)) {
        out.kind = Kind::Reducible;
        out.factor = *f;
        return out;
    }
    out.kind = Kind::Candidate;
    return out;
}

}  // namespace polyhouse
