// Exact gates used by the search and the table verifier: root-of-unity
// (cyclotomic-product) detection via Graeffe root-squaring, irreducibility
// over Z at desk scale, and the combined minimal-polynomial classification.
// Every positive verdict carries a witness that is re-checked by exact
// integer division; floating point is only ever a pre-filter.
#pragma once

#include <optional>
#include <vector>

#include "polyhouse/poly.hpp"

namespace polyhouse {

enum class Kind { RootOfUnity, Reducible, Candidate };

struct Classification {
    Kind kind = Kind::Candidate;
    // For Reducible: a proper monic factor, verified by exact division.
    std::optional<IntPolynomial> factor;
    // For RootOfUnity: indices n (with multiplicity) with P = prod Phi_n.
    std::vector<int> cyclotomic_indices;
};

// True iff every root of P is a root of unity, i.e. P is a product of
// cyclotomic polynomials (Kronecker). Exact: Graeffe squaring with a
// seen-set; an orbit that stays inside the binomial coefficient bound must
// cycle, and any coefficient exceeding C(n,k) certifies a root off the unit
// circle. P must be monic of degree >= 1. An optional certified house value
// (from the roots engine) may be supplied as a fast pre-filter: house
// > 1 + 1e-8 settles the question negatively without any integer work.
bool is_root_of_unity_poly(const IntPolynomial& p,
                           std::optional<double> house_hint = std::nullopt);

// Cyclotomic indices n (sorted, with multiplicity) such that P = prod Phi_n.
// Precondition: is_root_of_unity_poly(p). Aborts if peeling fails.
std::vector<int> cyclotomic_decomposition(const IntPolynomial& p);

// A proper monic factor of P if one exists (degree >= 1, less than deg P),
// nullopt if P is irreducible (or of degree <= 1). Layered: square-free
// part, integer roots, cyclotomic peeling, then factor reconstruction from
// certified root clusters (subsets up to half the degree, coefficients
// rounded and confirmed by exact division; the rounded constant term must
// divide a0). P must be monic, degree <= 40, height <= 9 by contract.
std::optional<IntPolynomial> find_factor(const IntPolynomial& p);

bool is_irreducible(const IntPolynomial& p);

// RootOfUnity if P is a cyclotomic product; else Reducible with a verified
// factor if one exists; else Candidate (irreducible, house > 1). The
// optional certified house value short-circuits the root-of-unity test.
Classification minimal_gate(const IntPolynomial& p,
                            std::optional<double> house_hint = std::nullopt);

}  // namespace polyhouse
