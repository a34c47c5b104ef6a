#include "polyhouse/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "polyhouse/algebra.hpp"
#include "polyhouse/bounds.hpp"
#include "polyhouse/roots.hpp"
#include "polyhouse/zpoly.hpp"

namespace polyhouse {

int default_height_for_degree(int d) {
    if (d <= 10) return 3;
    if (d <= 20) return 2;
    return 1;
}

namespace {

using u64 = std::uint64_t;

void validate_config(const SearchConfig& cfg, bool allow_height0) {
    if (cfg.degree < 2 || cfg.degree % 2 != 0)
        throw std::invalid_argument("search: degree must be even and >= 2");
    if (cfg.height < (allow_height0 ? 0 : 1))
        throw std::invalid_argument("search: height out of range");
    if (!(cfg.threshold > 1.0))
        throw std::invalid_argument("search: threshold must exceed 1");
    if (cfg.shard_total < 1 || cfg.shard_index < 0 ||
        cfg.shard_index >= cfg.shard_total)
        throw std::invalid_argument("search: bad shard specification");
}

u64 space_size(int slots, int base) {
    u64 total = 1;
    for (int i = 0; i < slots; ++i) {
        if (total > std::numeric_limits<u64>::max() / static_cast<u64>(base))
            throw std::invalid_argument("search: space too large to index");
        total *= static_cast<u64>(base);
    }
    return total;
}

void shard_range(const SearchConfig& cfg, u64 total, u64& start, u64& end) {
    using u128 = unsigned __int128;
    start = static_cast<u64>(u128(total) * u64(cfg.shard_index) / u64(cfg.shard_total));
    end = static_cast<u64>(u128(total) * u64(cfg.shard_index + 1) / u64(cfg.shard_total));
}

// digits[j] is the coefficient of x^{d-1-j}, j = 0 .. d/2-1 (so the last
// digit is the middle coefficient and steps fastest).
std::vector<int> decode_digits(u64 idx, int slots, int height) {
    std::vector<int> digits(static_cast<std::size_t>(slots));
    const u64 base = 2u * static_cast<u64>(height) + 1u;
    for (int j = slots - 1; j >= 0; --j) {
        digits[static_cast<std::size_t>(j)] =
            static_cast<int>(idx % base) - height;
        idx /= base;
    }
    return digits;
}

void increment_digits(std::vector<int>& digits, int height) {
    for (int j = static_cast<int>(digits.size()) - 1; j >= 0; --j) {
        if (digits[static_cast<std::size_t>(j)] < height) {
            ++digits[static_cast<std::size_t>(j)];
            return;
        }
        digits[static_cast<std::size_t>(j)] = -height;
    }
}

// First nonzero odd-exponent coefficient (scanning from x^{d-1} down) must
// be positive; the mirrored lower-half odd coefficients are equal by
// palindromy, so scanning the stored half suffices.
bool is_canonical(const std::vector<int>& digits, int degree) {
    for (std::size_t j = 0; j < digits.size(); ++j) {
        const int exponent = degree - 1 - static_cast<int>(j);
        if (exponent % 2 != 0 && digits[j] != 0) return digits[j] > 0;
    }
    return true;
}

std::vector<Coeff> half_with_leading_one(const std::vector<int>& digits) {
    std::vector<Coeff> half;
    half.reserve(digits.size() + 1);
    half.push_back(1);
    for (int v : digits) half.push_back(v);
    return half;
}

// ---- fast square-free certificate over F_p (p prime); a coprime pair mod p
// certifies square-freeness over Z, otherwise fall back to the exact gcd.
constexpr long long kModulus = 1000000007LL;

long long mulmod(long long a, long long b) {
    return static_cast<long long>(static_cast<__int128>(a) * b % kModulus);
}

long long powmod(long long a, long long e) {
    long long r = 1;
    a %= kModulus;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

void trim_mod(std::vector<long long>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool square_free_certain_mod_p(const IntPolynomial& p) {
    std::vector<long long> a(p.c.size()), b(p.c.size() - 1);
    for (std::size_t i = 0; i < p.c.size(); ++i)
        a[i] = ((p.c[i] % kModulus) + kModulus) % kModulus;
    for (std::size_t i = 1; i < p.c.size(); ++i)
        b[i - 1] = mulmod(a[i], static_cast<long long>(i));
    trim_mod(a);
    trim_mod(b);
    while (!b.empty()) {
        const long long inv = powmod(b.back(), kModulus - 2);
        for (auto& v : b) v = mulmod(v, inv);  // make monic
        while (a.size() >= b.size()) {
            const long long f = a.back();
            if (f != 0) {
                const std::size_t off = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i) {
                    a[off + i] -= mulmod(f, b[i]);
                    if (a[off + i] < 0) a[off + i] += kModulus;
                }
            }
            a.pop_back();
            trim_mod(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
        trim_mod(b);
    }
    return a.size() == 1;  // gcd is a nonzero constant
}

bool square_free(const IntPolynomial& p) {
    if (square_free_certain_mod_p(p)) return true;
    return zx::is_square_free(zx::to_zpoly(p));
}

// ---- running state, checkpointable -----------------------------------------

struct Contender {
    std::vector<Coeff> half;  // with the leading 1
    double house = 0;
    int nu = 0;
};

bool half_less(const std::vector<Coeff>& a, const std::vector<Coeff>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct SearchState {
    u64 next = 0;  // absolute odometer index of the next unprocessed spec
    u64 emitted = 0;
    u64 classified = 0;
    std::vector<Contender> contenders;  // within 2e-13 of the running record
    std::vector<Contender> cands;       // house < threshold
    double record = std::numeric_limits<double>::infinity();
    bool has_record = false;
};

constexpr double kTieWindow = 2e-13;
constexpr double kPruneMargin = 1e-9;

std::string config_line(const SearchConfig& cfg) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "config degree=%d height=%d threshold=%.17g shard=%d/%d "
                  "lemmas=%d realroot=%d skipnp=%d",
                  cfg.degree, cfg.height, cfg.threshold, cfg.shard_index,
                  cfg.shard_total, cfg.prune_lemmas ? 1 : 0,
                  cfg.prune_real_root ? 1 : 0, cfg.skip_nonprimitive ? 1 : 0);
    return buf;
}

void write_contender_line(std::ostream& os, const char* tag,
                          const Contender& c) {
    os << tag << ' ';
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", c.house);
    os << buf << ' ' << c.nu;
    for (Coeff v : c.half) os << ' ' << v;
    os << '\n';
}

void save_checkpoint(const SearchConfig& cfg, const SearchState& st) {
    const std::string& path = *cfg.checkpoint_path;
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp);
        if (!os)
            throw std::runtime_error("search: cannot write checkpoint " + tmp);
        os << "polyhouse-checkpoint v1\n";
        os << config_line(cfg) << '\n';
        os << "next " << st.next << '\n';
        os << "emitted " << st.emitted << '\n';
        os << "classified " << st.classified << '\n';
        for (const Contender& c : st.contenders)
            write_contender_line(os, "contender", c);
        for (const Contender& c : st.cands) write_contender_line(os, "cand", c);
        os << "end\n";
        if (!os)
            throw std::runtime_error("search: failed writing checkpoint " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("search: cannot move checkpoint into place");
}

bool parse_contender(std::istringstream& is, int slots, Contender& c) {
    double h;
    int nu;
    if (!(is >> h >> nu)) return false;
    std::vector<Coeff> half;
    Coeff v;
    while (is >> v) half.push_back(v);
    if (static_cast<int>(half.size()) != slots + 1 || half[0] != 1) return false;
    c = Contender{std::move(half), h, nu};
    return true;
}

bool load_checkpoint(const SearchConfig& cfg, SearchState& st) {
    std::ifstream is(*cfg.checkpoint_path);
    if (!is) return false;  // nothing saved yet
    const int slots = cfg.degree / 2;
    std::string line;
    if (!std::getline(is, line) || line != "polyhouse-checkpoint v1")
        throw std::runtime_error("search: unrecognized checkpoint header");
    if (!std::getline(is, line) || line != config_line(cfg))
        throw std::runtime_error(
            "search: checkpoint was written for a different configuration");
    SearchState loaded;
    bool saw_end = false;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "next") {
            if (!(ls >> loaded.next)) break;
        } else if (tag == "emitted") {
            if (!(ls >> loaded.emitted)) break;
        } else if (tag == "classified") {
            if (!(ls >> loaded.classified)) break;
        } else if (tag == "contender" || tag == "cand") {
            Contender c;
            if (!parse_contender(ls, slots, c))
                throw std::runtime_error("search: corrupt checkpoint line: " + line);
            (tag == "contender" ? loaded.contenders : loaded.cands)
                .push_back(std::move(c));
        } else if (tag == "end") {
            saw_end = true;
            break;
        } else {
            throw std::runtime_error("search: corrupt checkpoint line: " + line);
        }
    }
    if (!saw_end)
        throw std::runtime_error("search: truncated checkpoint file");
    for (const Contender& c : loaded.contenders)
        if (!loaded.has_record || c.house < loaded.record) {
            loaded.record = c.house;
            loaded.has_record = true;
        }
    st = std::move(loaded);
    return true;
}

void note_candidate(SearchState& st, const SearchConfig& cfg, Contender row) {
    if (row.house < cfg.threshold) st.cands.push_back(row);
    if (!st.has_record || row.house < st.record) {
        st.record = row.house;
        st.has_record = true;
    }
    if (row.house <= st.record + kTieWindow) {
        st.contenders.push_back(std::move(row));
        std::erase_if(st.contenders, [&](const Contender& c) {
            return c.house > st.record + kTieWindow;
        });
    }
}

void process_spec(const SearchConfig& cfg, SearchState& st,
                  const std::vector<int>& digits) {
    if (!is_canonical(digits, cfg.degree)) return;
    ++st.emitted;

    HalfSpec spec{cfg.degree, half_with_leading_one(digits)};
    IntPolynomial p = spec.expand();

    if (cfg.skip_nonprimitive && primitivity_decompose(p).second > 1) return;

    // Pruning is sound only once a record exists: a skipped polynomial must
    // be provably unable to beat or tie the record AND unable to enter the
    // below-threshold list.
    if (st.has_record) {
        const double gate = std::max(cfg.threshold, st.record + kPruneMargin);
        if (cfg.prune_real_root) {
            double lb = 0;
            if (sign_at(p, 3, 1) <= 0)
                lb = 3.0;  // monic: P(t) <= 0 forces a real root >= t
            else if (sign_at(p, 2, 1) <= 0)
                lb = 2.0;
            else if (sign_at(p, 3, 2) <= 0)
                lb = 1.5;
            if (lb >= gate) return;
        }
        if (cfg.prune_lemmas) {
            auto pat = match_lemma_pattern(p);
            if (pat && pat->guaranteed_lower_bound >= gate) return;
        }
    }

    // A non-square-free P shares a factor with P', hence is reducible and
    // can never be a minimal polynomial; skipping keeps root certification
    // away from multiple roots.
    if (!square_free(p)) return;

    const double h = house(p).first;
    const bool want_list = h < cfg.threshold;
    const bool want_record = !st.has_record || h <= st.record + kTieWindow;
    if (!want_list && !want_record) return;

    ++st.classified;
    Classification cls = minimal_gate(p, h);
    if (cls.kind != Kind::Candidate) return;

    const int nu = count_outside_unit(p);
    note_candidate(st, cfg, Contender{spec.half, h, nu});
}

ExtremalRecord finalize(const SearchConfig& cfg, SearchState&& st) {
    ExtremalRecord out;
    out.degree = cfg.degree;
    out.height = cfg.height;
    out.threshold = cfg.threshold;
    out.emitted = st.emitted;
    out.classified = st.classified;

    if (!st.contenders.empty()) {
        double mn = st.contenders.front().house;
        for (const Contender& c : st.contenders) mn = std::min(mn, c.house);
        std::erase_if(st.contenders, [&](const Contender& c) {
            return c.house > mn + kTieWindow;
        });
        std::sort(st.contenders.begin(), st.contenders.end(),
                  [](const Contender& a, const Contender& b) {
                      return half_less(a.half, b.half);
                  });
        const Contender& best = st.contenders.front();
        out.found = true;
        out.best_house = best.house;
        out.best_poly = HalfSpec{cfg.degree, best.half}.expand();
        out.nu = best.nu;
        for (const Contender& c : st.contenders)
            out.ties.push_back(HalfSpec{cfg.degree, c.half}.expand());
    }

    std::sort(st.cands.begin(), st.cands.end(),
              [](const Contender& a, const Contender& b) {
                  if (a.house != b.house) return a.house < b.house;
                  return half_less(a.half, b.half);
              });
    for (const Contender& c : st.cands)
        out.candidates_below_threshold.push_back(
            CandidateRow{HalfSpec{cfg.degree, c.half}.expand(), c.house, c.nu});
    return out;
}

}  // namespace

std::uint64_t enumerate_half(
    const SearchConfig& config,
    const std::function<void(const HalfSpec&)>& visitor) {
    validate_config(config, /*allow_height0=*/true);
    const int slots = config.degree / 2;
    const u64 total = space_size(slots, 2 * config.height + 1);
    u64 start = 0, end = 0;
    shard_range(config, total, start, end);

    u64 count = 0;
    std::vector<int> digits = decode_digits(start, slots, config.height);
    for (u64 i = start; i < end; ++i) {
        if (is_canonical(digits, config.degree)) {
            visitor(HalfSpec{config.degree, half_with_leading_one(digits)});
            ++count;
        }
        increment_digits(digits, config.height);
    }
    return count;
}

ExtremalRecord search_extremal(const SearchConfig& config) {
    validate_config(config, /*allow_height0=*/false);
    const int slots = config.degree / 2;
    const u64 total = space_size(slots, 2 * config.height + 1);
    u64 start = 0, end = 0;
    shard_range(config, total, start, end);

    SearchState st;
    st.next = start;
    if (config.checkpoint_path && load_checkpoint(config, st)) {
        if (st.next < start || st.next > end)
            throw std::runtime_error("search: checkpoint index out of range");
    }

    std::vector<int> digits = decode_digits(st.next, slots, config.height);
    while (st.next < end) {
        process_spec(config, st, digits);
        increment_digits(digits, config.height);
        ++st.next;
        if ((st.next - start) % config.checkpoint_every == 0 && st.next < end) {
            if (config.checkpoint_path) save_checkpoint(config, st);
            if (config.progress) config.progress(st.next - start, end - start);
        }
    }
    if (config.checkpoint_path) save_checkpoint(config, st);
    if (config.progress) config.progress(end - start, end - start);
    return finalize(config, std::move(st));
}

ExtremalRecord partition_merge(const std::vector<ExtremalRecord>& records) {
    if (records.empty())
        throw std::invalid_argument("partition_merge: no records");
    const ExtremalRecord& head = records.front();
    for (const ExtremalRecord& r : records)
        if (r.degree != head.degree || r.height != head.height ||
            r.threshold != head.threshold)
            throw std::invalid_argument(
                "partition_merge: mismatched shard configurations");

    SearchConfig cfg;
    cfg.degree = head.degree;
    cfg.height = head.height;
    cfg.threshold = head.threshold;

    SearchState st;
    for (const ExtremalRecord& r : records) {
        st.emitted += r.emitted;
        st.classified += r.classified;
        for (const CandidateRow& c : r.candidates_below_threshold)
            st.cands.push_back(
                Contender{half_from_poly(c.poly).half, c.house, c.nu});
        for (const IntPolynomial& tie : r.ties) {
            // Shard ties carry no stored house/nu; recompute (cheap, few).
            const double h = house(tie).first;
            if (!st.has_record || h < st.record) {
                st.record = h;
                st.has_record = true;
            }
            st.contenders.push_back(
                Contender{half_from_poly(tie).half, h, count_outside_unit(tie)});
        }
    }
    return finalize(cfg, std::move(st));
}

}  // namespace polyhouse
