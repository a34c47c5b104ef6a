#include "polyhouse/poly.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polyhouse {

IntPolynomial::IntPolynomial(std::vector<Coeff> ascending) : c(std::move(ascending)) {
    if (c.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
    if (c.back() == 0) throw std::invalid_argument("leading coefficient must be nonzero");
}

Coeff IntPolynomial::height() const {
    Coeff h = 0;
    for (Coeff a : c) {
        Coeff m = a < 0 ? -a : a;
        if (m > h) h = m;
    }
    return h;
}

namespace {

std::vector<Coeff> tokenize_ints(const std::string& text) {
    std::vector<Coeff> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        errno = 0;
        char* end = nullptr;
        long long v = std::strtoll(tok.c_str(), &end, 10);
        if (errno != 0 || end == tok.c_str() || *end != '\0')
            throw std::invalid_argument("bad integer token '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty polynomial text");
    return out;
}

}  // namespace

IntPolynomial parse_poly(const std::string& text, Encoding enc) {
    std::vector<Coeff> desc = tokenize_ints(text);
    if (enc == Encoding::Full) {
        if (desc.front() == 0) throw std::invalid_argument("leading coefficient must be nonzero");
        return IntPolynomial(std::vector<Coeff>(desc.rbegin(), desc.rend()));
    }
    HalfSpec h;
    if (desc.size() < 2) throw std::invalid_argument("half encoding needs degree >= 2");
    if (desc.front() != 1) throw std::invalid_argument("half encoding must be monic");
    h.degree = 2 * (static_cast<int>(desc.size()) - 1);
    h.half = std::move(desc);
    return h.expand();
}

std::string format_poly(const IntPolynomial& p, Encoding enc) {
    std::ostringstream out;
    auto join = [&out](const std::vector<Coeff>& v) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out << ' ';
            out << v[i];
        }
    };
    if (enc == Encoding::Full) {
        join(std::vector<Coeff>(p.c.rbegin(), p.c.rend()));
    } else {
        join(half_from_poly(p).half);
    }
    return out.str();
}

IntPolynomial HalfSpec::expand() const {
    if (degree < 2 || degree % 2 != 0)
        throw std::invalid_argument("half encoding needs positive even degree");
    if (half.size() != static_cast<size_t>(degree / 2 + 1) || half.front() != 1)
        throw std::invalid_argument("malformed half spec");
    std::vector<Coeff> c(degree + 1);
    for (int i = 0; i <= degree / 2; ++i) {
        c[degree - i] = half[i];
        c[i] = half[i];  // palindromic mirror; overlaps harmlessly at the middle
    }
    return IntPolynomial(std::move(c));
}

HalfSpec half_from_poly(const IntPolynomial& p) {
    int d = p.degree();
    if (d < 2 || d % 2 != 0 || !p.monic() || !is_reciprocal(p))
        throw std::invalid_argument("half encoding requires a monic palindromic even-degree polynomial");
    HalfSpec h;
    h.degree = d;
    h.half.reserve(d / 2 + 1);
    for (int i = d; i >= d / 2; --i) h.half.push_back(p.c[i]);
    return h;
}

bool is_reciprocal(const IntPolynomial& p) {
    int d = p.degree();
    for (int i = 0; 2 * i <= d; ++i)
        if (p.c[i] != p.c[d - i]) return false;
    return true;
}

IntPolynomial compose_power(const IntPolynomial& p, int k) {
    if (k < 1) throw std::invalid_argument("compose_power needs k >= 1");
    if (k == 1) return p;
    std::vector<Coeff> c(static_cast<size_t>(p.degree()) * k + 1, 0);
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<size_t>(i) * k] = p.c[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial negate_argument(const IntPolynomial& p) {
    std::vector<Coeff> c(p.c);
    for (size_t i = 0; i < c.size(); ++i)
        if (i % 2 == 1) c[i] = -c[i];
    if ((c.back() < 0) != (p.c.back() < 0))
        for (Coeff& a : c) a = -a;
    return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, int> primitivity_decompose(const IntPolynomial& p) {
    int d = p.degree();
    if (d < 1) throw std::invalid_argument("primitivity needs degree >= 1");
    int k = 0;
    for (int i = 1; i <= d; ++i)
        if (p.c[i] != 0) k = std::gcd(k, i);
    if (k <= 1) return {p, 1};
    std::vector<Coeff> q;
    q.reserve(d / k + 1);
    for (int i = 0; i <= d; i += k) q.push_back(p.c[i]);
    return {IntPolynomial(std::move(q)), k};
}

mpz_class evaluate_exact(const IntPolynomial& p, const mpz_class& num,
                         const mpz_class& den) {
    // Horner on den^d P(num/den) = sum a_i num^i den^{d-i}.
    mpz_class acc = to_mpz(p.c.back());
    mpz_class dpow = 1;
    for (int i = p.degree() - 1; i >= 0; --i) {
        dpow *= den;
        acc = acc * num + to_mpz(p.c[i]) * dpow;
    }
    return acc;
}

int sign_at(const IntPolynomial& p, long long num, long long den) {
    if (den <= 0) throw std::invalid_argument("sign_at needs den > 0");
    // Fast path in __int128: |sum| <= (deg+1) * height * max(|num|,den)^deg.
    int d = p.degree();
    long long base = std::max(num < 0 ? -num : num, den);
    long double bound = static_cast<long double>(d + 1) * static_cast<long double>(p.height());
    for (int i = 0; i < d && bound < 1e36L; ++i) bound *= static_cast<long double>(base);
    if (bound < 1e36L) {
        __int128 acc = p.c.back();
        __int128 dpow = 1;
        for (int i = d - 1; i >= 0; --i) {
            dpow *= den;
            acc = acc * num + static_cast<__int128>(p.c[i]) * dpow;
        }
        return acc > 0 ? 1 : acc < 0 ? -1 : 0;
    }
    mpz_class v = evaluate_exact(p, to_mpz(num), to_mpz(den));
    return sgn(v);
}

}  // namespace polyhouse
