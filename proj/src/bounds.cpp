#include "polyhouse/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "polyhouse/zpoly.hpp"

namespace polyhouse {

const ConstantCatalog& ConstantCatalog::get() {
    static const ConstantCatalog cat = [] {
        ConstantCatalog c;
        c.theta_poly = IntPolynomial{{-1, -1, 0, 1}};
        c.sigma_poly = IntPolynomial{{1, 0, 0, 1, 1, 1, 0, 0, 1}};
        c.tau_poly = IntPolynomial{{1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 1}};
        c.theta = house(c.theta_poly).first;
        c.sigma = house(c.sigma_poly).first;
        c.tau = house(c.tau_poly).first;
        double half = (3.0 + std::sqrt(5.0)) / 2.0;
        c.U = half * half;
        return c;
    }();
    return cat;
}

double matveev_lower_bound(int d, bool reciprocal) {
    if (d < 2) throw std::invalid_argument("matveev_lower_bound: d must be >= 2");
    if (reciprocal) {
        if (d < 6)
            throw std::invalid_argument(
                "matveev_lower_bound: reciprocal bound needs d >= 6");
        return std::exp(3.0 * std::log(d / 2.0) / (static_cast<double>(d) * d));
    }
    return std::exp(std::log(d + 0.5) / (static_cast<double>(d) * d));
}

double column_bound(int d, BoundKind kind) {
    if (d < 1) throw std::invalid_argument("column_bound: d must be >= 1");
    const ConstantCatalog& c = ConstantCatalog::get();
    switch (kind) {
        case BoundKind::Theta32: return std::pow(c.theta, 1.5 / d);
        case BoundKind::Tau10: return std::pow(c.tau, 10.0 / d);
        case BoundKind::Sigma8: return std::pow(c.sigma, 8.0 / d);
    }
    throw std::invalid_argument("column_bound: unknown kind");
}

double powerhouse(double house_value, int d) {
    if (house_value < 1.0)
        throw std::invalid_argument("powerhouse: house must be >= 1");
    if (d < 1) throw std::invalid_argument("powerhouse: d must be >= 1");
    return std::pow(house_value, d);
}

double taylor_T_pow(double T, int d, int terms) {
    if (T <= 1.0) throw std::invalid_argument("taylor_T_pow: T must be > 1");
    if (d < 1 || terms < 1)
        throw std::invalid_argument("taylor_T_pow: need d >= 1, terms >= 1");
    const double x = std::log(T) / d;
    double sum = 1.0, term = 1.0;
    for (int k = 1; k < terms; ++k) {
        term *= x / k;
        sum += term;
    }
    return sum;
}

namespace {

bool height_at_most(const IntPolynomial& p, Coeff h) {
    return p.height() <= h;
}

}  // namespace

std::optional<LemmaPattern> match_lemma_pattern(const IntPolynomial& p) {
    const int d = p.degree();
    if (d < 6 || !p.monic() || !is_reciprocal(p) || p.c[0] != 1)
        return std::nullopt;
    const auto& c = p.c;

    if (c[d - 1] == -1) {  // only Lemma 1 starts with -x^{d-1}
        if (d < 10 || !height_at_most(p, 1)) return std::nullopt;
        if (c[d - 2] != -1 || c[d - 3] != -1) return std::nullopt;
        const Coeff m = -c[d - 4];
        if (m != 0 && m != 1) return std::nullopt;
        if (c[4] != -m || c[3] != -1 || c[2] != -1 || c[1] != -1)
            return std::nullopt;
        return LemmaPattern{LemmaId::Lemma1, static_cast<int>(m), 1.5};
    }

    if (c[d - 1] == -2) {
        if (!height_at_most(p, 2)) return std::nullopt;
        if (c[d - 2] == -2) {  // Lemma 2
            if (c[2] != -2 || c[1] != -2) return std::nullopt;
            return LemmaPattern{LemmaId::Lemma2, 0, 2.0};
        }
        if (c[d - 2] == -1 && d >= 10) {  // Lemma 3
            const Coeff m = -c[d - 3];
            if (m != 1 && m != 2) return std::nullopt;
            if (c[3] != -m || c[2] != -1 || c[1] != -2) return std::nullopt;
            return LemmaPattern{LemmaId::Lemma3, static_cast<int>(m), 2.0};
        }
    }
    return std::nullopt;
}

CertifiedRealRoot verify_lemma_instance(const LemmaPattern& pat,
                                        const IntPolynomial& p) {
    auto matched = match_lemma_pattern(p);
    if (!matched || matched->which != pat.which || matched->m != pat.m)
        throw std::invalid_argument(
            "verify_lemma_instance: polynomial does not match the pattern");

    long long lo_num, lo_den, hi_num, hi_den;
    if (pat.which == LemmaId::Lemma1) {
        lo_num = 3; lo_den = 2; hi_num = 2; hi_den = 1;
    } else {
        lo_num = 2; lo_den = 1; hi_num = 3; hi_den = 1;
    }
    const int s_lo = sign_at(p, lo_num, lo_den);
    const int s_hi = sign_at(p, hi_num, hi_den);
    if (!(s_lo < 0 && s_hi > 0))
        throw std::logic_error(
            "verify_lemma_instance: sign bracketing failed for '" +
            format_poly(p, Encoding::Full) +
            "' -- this would falsify the lemma");
    auto root = real_root_in_interval(p, lo_num, lo_den, hi_num, hi_den);
    if (!root)
        throw std::logic_error(
            "verify_lemma_instance: bracketing root vanished during bisection");
    return *root;
}

IntPolynomial generate_prime5mod6(int d) {
    if (d < 5 || d % 6 != 5)
        throw std::invalid_argument(
            "generate_prime5mod6: need d >= 5 with d = 5 (mod 6)");
    zx::ZPoly num(static_cast<std::size_t>(d) + 3, mpz_class(0));
    num[static_cast<std::size_t>(d) + 2] = 1;
    num[2] = -1;
    num[0] = -1;
    const zx::ZPoly den = {1, -1, 1};  // x^2 - x + 1
    zx::ZPoly q, r;
    if (!zx::divrem_exact(num, den, q, r) || zx::degree(r) >= 0)
        throw std::logic_error(
            "generate_prime5mod6: x^2 - x + 1 failed to divide x^{d+2}-x^2-1");
    auto out = zx::to_int_poly(q);
    if (!out) throw std::logic_error("generate_prime5mod6: coefficient overflow");
    return *out;
}

IntPolynomial failed_generalization_quotient(int d) {
    if (d < 19 || d % 12 != 7)
        throw std::invalid_argument(
            "failed_generalization_quotient: need odd d >= 19 with d = 7 (mod 12)");
    zx::ZPoly num(static_cast<std::size_t>(d) + 4, mpz_class(0));
    num[static_cast<std::size_t>(d) + 3] = 1;
    num[static_cast<std::size_t>(d + 3) / 2] = -1;
    num[1] = -1;
    num[0] = 1;
    const zx::ZPoly den = {-1, 1, -1, 1};  // (x-1)(x^2+1)
    zx::ZPoly q, r;
    if (!zx::divrem_exact(num, den, q, r) || zx::degree(r) >= 0)
        throw std::runtime_error(
            "failed_generalization_quotient: (x-1)(x^2+1) does not divide "
            "x^" + std::to_string(d + 3) + " - x^" + std::to_string((d + 3) / 2) +
            " - x + 1");
    auto out = zx::to_int_poly(q);
    if (!out)
        throw std::logic_error("failed_generalization_quotient: overflow");
    return *out;
}

CompositePrediction composite_prediction(
    int d, const std::map<int, DivisorRecord>& known, bool reciprocal) {
    if (d < (reciprocal ? 4 : 2))
        throw std::invalid_argument("composite_prediction: degree too small");
    if (reciprocal && d % 2 != 0)
        throw std::invalid_argument(
            "composite_prediction: reciprocal degree must be even");

    std::vector<int> divisors;
    for (int b = reciprocal ? 2 : 1; b < d; ++b) {
        if (d % b != 0) continue;
        if (reciprocal && b % 2 != 0) continue;
        divisors.push_back(b);
    }
    if (divisors.empty())
        throw std::invalid_argument(
            "composite_prediction: no usable proper divisors for degree " +
            std::to_string(d));

    double best_ph = 0;
    int best_b = -1;
    for (int b : divisors) {
        auto it = known.find(b);
        if (it == known.end())
            throw std::invalid_argument(
                "composite_prediction: missing divisor record for degree " +
                std::to_string(b));
        const double ph = powerhouse(it->second.house, b);
        if (best_b < 0 || ph < best_ph) {
            best_ph = ph;
            best_b = b;
        }
    }

    CompositePrediction out;
    out.divisor = best_b;
    for (int b : divisors) {
        const double ph = powerhouse(known.at(b).house, b);
        if (std::abs(ph - best_ph) <= 1e-12 * best_ph) out.tied.push_back(b);
    }
    const DivisorRecord& rec = known.at(best_b);
    out.poly = compose_power(rec.poly, d / best_b);
    out.house = std::pow(rec.house, static_cast<double>(best_b) / d);
    return out;
}

std::pair<IntPolynomial, double> upper_bound_witness(int d, bool reciprocal) {
    if (d < 1) throw std::invalid_argument("upper_bound_witness: d must be >= 1");
    if (!reciprocal) {
        std::vector<Coeff> c(static_cast<std::size_t>(d) + 1, 0);
        c[0] = -2;
        c[static_cast<std::size_t>(d)] = 1;
        return {IntPolynomial(std::move(c)), std::pow(2.0, 1.0 / d)};
    }
    if (d % 2 != 0)
        throw std::invalid_argument(
            "upper_bound_witness: reciprocal witness needs even degree");
    std::vector<Coeff> c(static_cast<std::size_t>(d) + 1, 0);
    c[0] = 1;
    c[static_cast<std::size_t>(d)] = 1;
    c[static_cast<std::size_t>(d / 2)] = 3;
    return {IntPolynomial(std::move(c)),
            std::pow(ConstantCatalog::get().U, 1.0 / d)};
}

}  // namespace polyhouse
