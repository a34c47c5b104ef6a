#include "polyhouse/zpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polyhouse::zx {

ZPoly to_zpoly(const IntPolynomial& p) {
    ZPoly z;
    z.reserve(p.c.size());
    for (Coeff a : p.c) z.emplace_back(static_cast<long>(a));
    return z;
}

std::optional<IntPolynomial> to_int_poly(const ZPoly& p) {
    std::vector<Coeff> c;
    c.reserve(p.size());
    for (const mpz_class& a : p) {
        if (!a.fits_slong_p()) return std::nullopt;
        c.push_back(a.get_si());
    }
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.empty() || c.back() == 0) return std::nullopt;
    return IntPolynomial(std::move(c));
}

int degree(const ZPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void normalize(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    normalize(out);
    return out;
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    normalize(out);
    return out;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] -= b[i];
    }
    normalize(out);
    return out;
}

ZPoly derivative(const ZPoly& p) {
    if (p.size() <= 1) return {};
    ZPoly out(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<long>(i);
    normalize(out);
    return out;
}

ZPoly reverse(const ZPoly& p) {
    int d = degree(p);
    if (d < 0) return {};
    ZPoly out(d + 1);
    for (int i = 0; i <= d; ++i) out[i] = p[d - i];
    normalize(out);
    return out;
}

namespace {

QPoly to_q(const ZPoly& p) {
    QPoly q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[i] = mpq_class(p[i]);
    return q;
}

int qdegree(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b over Q (b nonzero).
QPoly qrem(QPoly a, const QPoly& b) {
    int db = qdegree(b);
    for (int da = qdegree(a); da >= db; da = qdegree(a)) {
        mpq_class f = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        a[da] = 0;  // kill rounding-free residue exactly
        qtrim(a);
        if (a.empty()) break;
    }
    qtrim(a);
    return a;
}

ZPoly q_to_primitive_z(const QPoly& q) {
    if (q.empty()) return {};
    mpz_class lcm_den = 1;
    for (const mpq_class& v : q) lcm_den = lcm(lcm_den, v.get_den());
    ZPoly z(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        mpq_class scaled = q[i] * lcm_den;
        z[i] = scaled.get_num();
    }
    return primitive_part(z);
}

}  // namespace

bool divrem_exact(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) {
    int db = degree(b);
    if (db < 0) throw std::invalid_argument("division by zero polynomial");
    QPoly qa = to_q(a), qb = to_q(b);
    QPoly quot(a.size(), mpq_class(0));
    for (int da = qdegree(qa); da >= db; da = qdegree(qa)) {
        mpq_class f = qa[da] / qb[db];
        quot[da - db] += f;
        for (int i = 0; i <= db; ++i) qa[da - db + i] -= f * qb[i];
        qa[da] = 0;
        qtrim(qa);
        if (qa.empty()) break;
    }
    q.clear();
    r.clear();
    for (const mpq_class& v : quot) {
        if (v.get_den() != 1) return false;
        q.push_back(v.get_num());
    }
    for (const mpq_class& v : qa) {
        if (v.get_den() != 1) return false;
        r.push_back(v.get_num());
    }
    normalize(q);
    normalize(r);
    return true;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
    ZPoly q, r;
    if (!divrem_exact(a, b, q, r)) return std::nullopt;
    if (degree(r) >= 0) return std::nullopt;
    return q;
}

mpz_class content(const ZPoly& p) {
    mpz_class g = 0;
    for (const mpz_class& a : p) g = gcd(g, a);
    return g;
}

ZPoly primitive_part(const ZPoly& p) {
    ZPoly out = p;
    normalize(out);
    if (out.empty()) return out;
    mpz_class g = content(out);
    if (out.back() < 0) g = -g;
    for (mpz_class& a : out) a /= g;
    return out;
}

ZPoly gcd_q(const ZPoly& a, const ZPoly& b) {
    QPoly x = to_q(a), y = to_q(b);
    qtrim(x);
    qtrim(y);
    while (!y.empty()) {
        QPoly r = qrem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return q_to_primitive_z(x);
}

bool is_square_free(const ZPoly& p) {
    if (degree(p) <= 1) return true;
    return degree(gcd_q(p, derivative(p))) == 0;
}

mpz_class eval(const ZPoly& p, const mpz_class& x) {
    mpz_class acc = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

namespace {

int qsign_at(const QPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
    return sgn(acc);
}

int sign_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
    int var = 0, prev = 0;
    for (const QPoly& p : chain) {
        int s = qsign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

int count_real_roots_open(const ZPoly& p, const mpq_class& a, const mpq_class& b) {
    if (!(a < b)) throw std::invalid_argument("empty interval");
    std::vector<QPoly> chain;
    chain.push_back(to_q(p));
    qtrim(chain.back());
    QPoly d = to_q(derivative(p));
    qtrim(d);
    if (!d.empty()) chain.push_back(std::move(d));
    while (chain.back().size() > 1) {
        QPoly r = qrem(chain[chain.size() - 2], chain.back());
        if (r.empty()) {
            // p not square-free: restart on p / gcd, which shares the root set.
            ZPoly g = gcd_q(p, derivative(p));
            return count_real_roots_open(*divide_exact(p, g), a, b);
        }
        for (mpq_class& v : r) v = -v;
        chain.push_back(std::move(r));
    }
    if (qsign_at(chain.front(), a) == 0 || qsign_at(chain.front(), b) == 0)
        throw std::invalid_argument("interval endpoint is a root");
    return sign_variations(chain, a) - sign_variations(chain, b);
}

ZPoly circle_transform(const ZPoly& p) {
    int d = degree(p);
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("circle transform needs even degree >= 2");
    ZPoly rev = reverse(p);
    if (rev != p) throw std::invalid_argument("circle transform needs a palindromic polynomial");
    int n = d / 2;
    // C_0 = 2, C_1 = w, C_{k+1} = w C_k - C_{k-1};  z^k + z^{-k} = C_k(z + 1/z).
    ZPoly ck_prev{2}, ck{0, 1};
    ZPoly q{p[n]};
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            ZPoly next = sub(mul(ZPoly{0, 1}, ck), ck_prev);
            ck_prev = std::move(ck);
            ck = std::move(next);
        }
        if (p[n + k] != 0) q = add(q, mul(ZPoly{p[n + k]}, ck));
    }
    normalize(q);
    return q;
}

namespace {

// Divides out every (x - 1) and (x + 1) factor; returns how many of each.
std::pair<int, int> strip_unit_real_roots(ZPoly& p) {
    int ones = 0, minus = 0;
    for (;;) {
        if (eval(p, 1) == 0) {
            p = *divide_exact(p, ZPoly{-1, 1});
            ++ones;
        } else if (eval(p, -1) == 0) {
            p = *divide_exact(p, ZPoly{1, 1});
            ++minus;
        } else {
            return {ones, minus};
        }
    }
}

}  // namespace

int unit_circle_root_count(const ZPoly& p_in) {
    ZPoly p = primitive_part(p_in);
    if (degree(p) <= 0) return 0;
    if (!is_square_free(p)) throw std::invalid_argument("unit circle count needs a square-free polynomial");
    if (p.front() == 0) p = *divide_exact(p, ZPoly{0, 1});  // a root at 0 is off the circle

    // Circle roots other than +-1 are shared with the reversal.
    auto [ones, minus] = strip_unit_real_roots(p);
    int count = ones + minus;
    ZPoly g = gcd_q(p, reverse(p));
    int dg = degree(g);
    if (dg <= 0) return count;
    if (dg % 2 != 0 || reverse(g) != g) {
        // Anti-palindromic gcds pick up a stray x-1 / x+1 factor pairing;
        // after the strip above this cannot happen for square-free input.
        throw std::logic_error("unexpected non-palindromic reciprocal gcd");
    }
    ZPoly q = circle_transform(g);
    return count + 2 * count_real_roots_open(q, mpq_class(-2), mpq_class(2));
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const ZPoly& cyclotomic(int n) {
    static std::map<int, ZPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
    ZPoly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto q = divide_exact(num, cyclotomic(d));
        if (!q) throw std::logic_error("cyclotomic recursion failed");
        num = std::move(*q);
    }
    return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace polyhouse::zx
