// Complete enumeration of monic palindromic polynomials of a given even
// degree and height, one canonical representative per {P(x), P(-x)} class,
// with sound pruning (boundary-pattern lemmas and exact-sign real-root
// probes are applied only when the running record makes the skip provably
// safe). Sharding splits the odometer range; merge is deterministic.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyhouse/poly.hpp"

namespace polyhouse {

struct SearchConfig {
    int degree = 4;            // even, >= 2
    int height = 1;            // interior coefficients range over [-H, H]
    double threshold = 1.3;    // collect all Candidates with house < threshold
    bool prune_lemmas = true;
    bool prune_real_root = true;
    bool skip_nonprimitive = false;  // skip specs with exponent-gcd > 1
    int shard_index = 0;
    int shard_total = 1;
    std::optional<std::string> checkpoint_path;
    std::uint64_t checkpoint_every = 1u << 20;
    // Called with (processed, shard_size) at checkpoint cadence, if set.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct CandidateRow {
    IntPolynomial poly;
    double house = 0;
    int nu = 0;
};

struct ExtremalRecord {
    int degree = 0;
    int height = 0;
    double threshold = 0;
    bool found = false;        // false iff no Candidate was ever classified
    double best_house = 0;
    IntPolynomial best_poly;
    int nu = 0;
    // Everything within 2e-13 of best_house (includes best_poly). best_poly
    // is the lexicographically smallest half-coefficient sequence among
    // these, which makes the result independent of shard order.
    std::vector<IntPolynomial> ties;
    // All Candidates with house < threshold, ascending by house (ties by
    // half-coefficient sequence).
    std::vector<CandidateRow> candidates_below_threshold;
    std::uint64_t emitted = 0;     // canonical specs visited
    std::uint64_t classified = 0;  // specs that reached minimal_gate
};

// The paper-mirroring defaults: height 3 through degree 10, 2 through 20,
// 1 from degree 22 on.
int default_height_for_degree(int d);

// Emits every canonical monic HalfSpec of config's degree/height (within the
// config's shard) exactly once and returns how many were emitted. Canonical:
// the first nonzero odd-exponent coefficient, scanning from x^{d-1}
// downward, is positive; P and P(-x) have the same house, so one
// representative per pair suffices. height 0 is allowed here (single spec).
std::uint64_t enumerate_half(const SearchConfig& config,
                             const std::function<void(const HalfSpec&)>& visitor);

// Full pipeline: canonical spec -> optional nonprimitive skip -> sound
// pruning -> square-free precheck (a non-square-free palindromic P is
// reducible, so skipping it is exact) -> certified house -> record/threshold
// gate -> minimal_gate -> exact nu. Returns the minimum house over all
// Candidate polynomials plus the below-threshold list; found == false when
// nothing classified (reported, never thrown).
ExtremalRecord search_extremal(const SearchConfig& config);

// Combine shard results (same degree/height/threshold, disjoint shards) into
// the record an unsharded run would produce. Throws std::invalid_argument on
// mismatched configs or an empty input.
ExtremalRecord partition_merge(const std::vector<ExtremalRecord>& records);

}  // namespace polyhouse
