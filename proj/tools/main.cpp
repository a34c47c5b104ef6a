// polyhouse: one executable, eight subcommands, scriptable output.
//
// Exit codes: 0 success, 1 verification/computation failure, 2 usage error.
// All numeric output uses 15 significant digits. --tsv output goes to stdout
// only and is byte-stable for a given argv; progress and diagnostics go to
// stderr.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "polyhouse/algebra.hpp"
#include "polyhouse/bounds.hpp"
#include "polyhouse/corpus.hpp"
#include "polyhouse/poly.hpp"
#include "polyhouse/roots.hpp"
#include "polyhouse/search.hpp"
#include "polyhouse/zpoly.hpp"

namespace {

using namespace polyhouse;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void kv(const std::string& key, const std::string& value) {
    std::printf("%-12s %s\n", key.c_str(), value.c_str());
}

// ------------------------------------------------------------- poly input

struct PolyInput {
    std::string half;
    std::string full;

    void attach(CLI::App* sub) {
        auto* g = sub->add_option_group("input", "polynomial input");
        g->add_option("--half", half,
                      "monic reciprocal polynomial of even degree d, given as "
                      "the d/2+1 coefficients from x^d down to x^{d/2}");
        g->add_option("--full", full,
                      "all coefficients, highest degree first");
        g->require_option(1);
    }

    IntPolynomial parse() const {
        if (!half.empty())
            return parse_poly(half, Encoding::Half);
        return parse_poly(full, Encoding::Full);
    }
};

void require_square_free(const IntPolynomial& p, const char* who) {
    if (!zx::is_square_free(zx::to_zpoly(p)))
        throw std::invalid_argument(
            std::string(who) +
            ": input has a repeated factor; certified root disks need a "
            "square-free polynomial (divide out the squared part first)");
}

std::string flags_of(const IntPolynomial& p) {
    std::string f;
    if (primitivity_decompose(p).second == 1) f += 'P';
    if (mahler_measure(p) < 1.3) f += 'M';
    if (f.empty()) f = "-";
    return f;
}

// ------------------------------------------------------------ table names

// Display tags (T1..T8); table_name() in the library is the data-file stem.
const char* table_tag(TableId t) {
    switch (t) {
        case TableId::T1: return "T1";
        case TableId::T2: return "T2";
        case TableId::T3: return "T3";
        case TableId::T4: return "T4";
        case TableId::T5: return "T5";
        case TableId::T6: return "T6";
        case TableId::T7: return "T7";
        case TableId::T8: return "T8";
    }
    return "?";
}

const std::vector<TableId>& all_tables() {
    static const std::vector<TableId> v = {
        TableId::T1, TableId::T2, TableId::T3, TableId::T4,
        TableId::T5, TableId::T6, TableId::T7, TableId::T8};
    return v;
}

TableId parse_table(const std::string& s) {
    for (TableId t : all_tables())
        if (s == table_tag(t)) return t;
    throw std::invalid_argument("unknown table id: " + s);
}

// ------------------------------------------------------------ subcommands

int run_house(const PolyInput& in, bool tsv) {
    IntPolynomial p = in.parse();
    if (p.degree() < 1)
        throw std::invalid_argument("house: degree must be >= 1");
    require_square_free(p, "house");
    auto [value, err] = house(p);
    if (tsv) {
        std::printf("# columns: degree\thouse\tcert_error\n");
        std::printf("%d\t%s\t%s\n", p.degree(), fmt(value).c_str(),
                    fmt(err).c_str());
    } else {
        std::printf("%s\n", fmt(value).c_str());
    }
    return 0;
}

int run_measure(const PolyInput& in, bool tsv) {
    IntPolynomial p = in.parse();
    if (p.degree() < 1)
        throw std::invalid_argument("measure: degree must be >= 1");
    require_square_free(p, "measure");
    RootSummary s = analyze(p);
    if (tsv) {
        std::printf("# columns: degree\thouse\tmahler\tnu\n");
        std::printf("%d\t%s\t%s\t%d\n", p.degree(), fmt(s.house).c_str(),
                    fmt(s.mahler).c_str(), s.nu);
    } else {
        kv("degree", std::to_string(p.degree()));
        kv("house", fmt(s.house));
        kv("mahler", fmt(s.mahler));
        kv("nu", std::to_string(s.nu));
    }
    return 0;
}

int run_classify(const PolyInput& in, bool tsv) {
    IntPolynomial p = in.parse();
    if (p.degree() < 1)
        throw std::invalid_argument("classify: degree must be >= 1");
    if (!p.monic())
        throw std::invalid_argument("classify: polynomial must be monic");
    Classification c = minimal_gate(p);
    std::string kind, detail;
    switch (c.kind) {
        case Kind::RootOfUnity: {
            kind = "root-of-unity";
            for (size_t i = 0; i < c.cyclotomic_indices.size(); ++i)
                detail += (i ? " " : "") +
                          std::to_string(c.cyclotomic_indices[i]);
            break;
        }
        case Kind::Reducible:
            kind = "reducible";
            detail = format_poly(*c.factor, Encoding::Full);
            break;
        case Kind::Candidate:
            kind = "candidate";
            detail = "-";
            break;
    }
    if (tsv) {
        std::printf("# columns: kind\tdetail\n");
        std::printf("%s\t%s\n", kind.c_str(), detail.c_str());
    } else {
        kv("kind", kind);
        if (c.kind == Kind::RootOfUnity) kv("cyclotomic", detail);
        if (c.kind == Kind::Reducible) kv("factor", detail);
    }
    return 0;
}

int run_bounds(int degree, bool reciprocal, bool tsv) {
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("degree", std::to_string(degree));
    rows.emplace_back("reciprocal", reciprocal ? "yes" : "no");
    bool matveev_ok = reciprocal ? degree >= 6 : degree >= 2;
    rows.emplace_back("matveev-lower",
                      matveev_ok ? fmt(matveev_lower_bound(degree, reciprocal))
                                 : "-");
    rows.emplace_back("theta-3-2d",
                      fmt(column_bound(degree, BoundKind::Theta32)));
    rows.emplace_back("tau-10-d", fmt(column_bound(degree, BoundKind::Tau10)));
    rows.emplace_back("sigma-8-d",
                      fmt(column_bound(degree, BoundKind::Sigma8)));
    if (!reciprocal || degree % 2 == 0) {
        auto [poly, h] = upper_bound_witness(degree, reciprocal);
        rows.emplace_back("witness-poly", format_poly(poly, Encoding::Full));
        rows.emplace_back("witness-house", fmt(h));
    } else {
        rows.emplace_back("witness-poly", "-");
        rows.emplace_back("witness-house", "-");
    }
    if (tsv) {
        std::printf("# columns: name\tvalue\n");
        for (const auto& [k, v] : rows)
            std::printf("%s\t%s\n", k.c_str(), v.c_str());
    } else {
        for (const auto& [k, v] : rows) kv(k, v);
    }
    return 0;
}

struct SearchArgs {
    int degree = 0;
    int height = -1;  // -1: use the default schedule for the degree
    double threshold = 1.3;
    std::string shard;  // "i/n", 0-based index
    std::string checkpoint;
    bool no_prune = false;
    bool skip_nonprimitive = false;
    int jobs = 1;
    bool tsv = false;
};

std::string resolve_checkpoint(const std::string& given) {
    std::filesystem::path p(given);
    if (p.is_relative()) {
        const char* dir = std::getenv("POLYHOUSE_CHECKPOINT_DIR");
        if (dir && *dir) p = std::filesystem::path(dir) / p;
    }
    return p.string();
}

void print_candidate_row(const IntPolynomial& poly, double h, int nu) {
    std::printf("%d\t%s\t%d\t%s\t%s\n", poly.degree(), fmt(h).c_str(), nu,
                format_poly(poly, Encoding::Half).c_str(),
                flags_of(poly).c_str());
}

int run_search(const SearchArgs& a) {
    SearchConfig cfg;
    cfg.degree = a.degree;
    cfg.height = a.height >= 0 ? a.height : default_height_for_degree(a.degree);
    cfg.threshold = a.threshold;
    cfg.prune_lemmas = !a.no_prune;
    cfg.prune_real_root = !a.no_prune;
    cfg.skip_nonprimitive = a.skip_nonprimitive;

    if (!a.shard.empty()) {
        int i = 0, n = 0, len = 0;
        if (std::sscanf(a.shard.c_str(), "%d/%d%n", &i, &n, &len) != 2 ||
            len != static_cast<int>(a.shard.size()) || n < 1 || i < 0 ||
            i >= n)
            throw std::invalid_argument(
                "search: --shard expects i/n with 0 <= i < n");
        cfg.shard_index = i;
        cfg.shard_total = n;
    }
    if (!a.checkpoint.empty())
        cfg.checkpoint_path = resolve_checkpoint(a.checkpoint);

    ExtremalRecord rec;
    if (a.jobs > 1) {
        if (!a.shard.empty())
            throw std::invalid_argument(
                "search: --jobs partitions the space itself; it cannot be "
                "combined with --shard");
        if (!a.checkpoint.empty())
            throw std::invalid_argument(
                "search: --checkpoint needs a single sequential worker; use "
                "--shard workers for a resumable split");
        std::vector<ExtremalRecord> parts(a.jobs);
        std::vector<std::thread> workers;
        std::mutex m;
        std::exception_ptr fail;
        for (int j = 0; j < a.jobs; ++j) {
            workers.emplace_back([&, j] {
                try {
                    SearchConfig c = cfg;
                    c.shard_index = j;
                    c.shard_total = a.jobs;
                    parts[j] = search_extremal(c);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(m);
                    if (!fail) fail = std::current_exception();
                }
            });
        }
        for (auto& w : workers) w.join();
        if (fail) std::rethrow_exception(fail);
        rec = partition_merge(parts);
    } else {
        cfg.progress = [](std::uint64_t done, std::uint64_t total) {
            std::fprintf(stderr, "search: %" PRIu64 "/%" PRIu64 " specs\n",
                         done, total);
        };
        rec = search_extremal(cfg);
    }

    if (a.tsv) {
        std::printf("# columns: degree\thouse\tnu\thalf\tflags\n");
        if (!rec.candidates_below_threshold.empty()) {
            for (const auto& row : rec.candidates_below_threshold)
                print_candidate_row(row.poly, row.house, row.nu);
        } else if (rec.found) {
            print_candidate_row(rec.best_poly, rec.best_house, rec.nu);
        }
    } else {
        kv("degree", std::to_string(rec.degree));
        kv("height", std::to_string(rec.height));
        kv("threshold", fmt(rec.threshold));
        kv("emitted", std::to_string(rec.emitted));
        kv("classified", std::to_string(rec.classified));
        kv("found", rec.found ? "yes" : "no");
        if (rec.found) {
            kv("best-house", fmt(rec.best_house));
            kv("best-poly", format_poly(rec.best_poly, Encoding::Half));
            kv("nu", std::to_string(rec.nu));
            kv("ties", std::to_string(rec.ties.size()));
        }
        kv("below-threshold",
           std::to_string(rec.candidates_below_threshold.size()));
        for (const auto& row : rec.candidates_below_threshold)
            print_candidate_row(row.poly, row.house, row.nu);
    }
    return 0;
}

struct VerifyArgs {
    std::string table = "all";
    std::string data_dir;
    bool conjectures = false;
    bool strict = false;
    bool tsv = false;
};

void print_failure_tsv(const CheckFailure& f) {
    std::string row = f.row_index < 0 ? "-" : std::to_string(f.row_index);
    std::printf("%s\t%d\t%s\t%s\t%s\t%s\n", table_tag(f.table), f.degree,
                row.c_str(), f.check.c_str(),
                f.documented ? "documented" : "fail", f.message.c_str());
}

void print_failure_human(const CheckFailure& f) {
    std::printf("  [%s] %s: %s\n", f.documented ? "documented" : "FAIL",
                f.check.c_str(), f.message.c_str());
}

int run_verify(const VerifyArgs& a) {
    Corpus corpus = Corpus::load(a.data_dir);
    std::vector<TableId> tables;
    if (a.table == "all")
        tables = all_tables();
    else
        tables.push_back(parse_table(a.table));

    if (a.tsv)
        std::printf("# columns: table\tdegree\trow\tcheck\tstatus\tdetail\n");

    bool ok = true;
    for (TableId t : tables) {
        VerifyReport rep = verify_table(corpus, t);
        bool table_ok = a.strict ? rep.pass : rep.pass_documented;
        ok = ok && table_ok;
        int documented = 0, undocumented = 0;
        auto tally = [&](const CheckFailure& f) {
            (f.documented ? documented : undocumented)++;
        };
        for (const auto& row : rep.rows)
            for (const auto& f : row.failures) tally(f);
        for (const auto& f : rep.summary_failures) tally(f);

        if (a.tsv) {
            for (const auto& row : rep.rows)
                for (const auto& f : row.failures) print_failure_tsv(f);
            for (const auto& f : rep.summary_failures) print_failure_tsv(f);
            for (const auto& n : rep.notes)
                std::printf("%s\t-\t-\tnote\tinfo\t%s\n", table_tag(t),
                            n.c_str());
            std::printf("%s\t-\t-\tsummary\t%s\trows=%d documented=%d "
                        "undocumented=%d\n",
                        table_tag(t), table_ok ? "pass" : "fail", rep.checked,
                        documented, undocumented);
        } else {
            std::printf("%s: %s (%d rows", table_tag(t),
                        table_ok ? "PASS" : "FAIL", rep.checked);
            if (documented)
                std::printf(", %d documented artifact%s", documented,
                            documented == 1 ? "" : "s");
            if (undocumented)
                std::printf(", %d undocumented failure%s", undocumented,
                            undocumented == 1 ? "" : "s");
            std::printf(")\n");
            for (const auto& row : rep.rows)
                for (const auto& f : row.failures) print_failure_human(f);
            for (const auto& f : rep.summary_failures) print_failure_human(f);
            for (const auto& n : rep.notes)
                std::printf("  [note] %s\n", n.c_str());
        }
    }

    if (a.conjectures) {
        auto evidence = check_conjecture_evidence(corpus);
        if (a.tsv) {
            for (const auto& item : evidence)
                std::printf("EV\t-\t-\t%s\t%s\t%s: %s\n",
                            item.conjecture.c_str(),
                            item.holds ? "holds" : "fails",
                            item.instance.c_str(), item.note.c_str());
        } else {
            std::printf("conjecture evidence:\n");
            for (const auto& item : evidence)
                std::printf("  [%s] %s: %s — %s\n",
                            item.holds ? "holds" : "fails",
                            item.conjecture.c_str(), item.instance.c_str(),
                            item.note.c_str());
        }
    }

    if (a.tsv) {
        std::printf("ALL\t-\t-\tverify\t%s\t%s\n", ok ? "pass" : "fail",
                    a.strict ? "strict" : "documented artifacts tolerated");
    } else {
        std::printf("verify: %s%s\n", ok ? "PASS" : "FAIL",
                    a.strict ? " (strict)" : "");
    }
    return ok ? 0 : 1;
}

int run_predict(int degree, bool reciprocal, const std::string& data_dir,
                bool tsv) {
    Corpus corpus = Corpus::load(data_dir);
    TableId source = reciprocal ? TableId::T1 : TableId::T2;
    std::map<int, DivisorRecord> known;
    for (int b = 1; b < degree; ++b) {
        if (degree % b != 0) continue;
        if (reciprocal && b % 2 != 0) continue;
        const CorpusEntry* e = corpus.find(source, b);
        if (!e) continue;  // composite_prediction reports what is missing
        known[b] = DivisorRecord{e->poly, analyze(e->poly).house};
    }
    CompositePrediction pred = composite_prediction(degree, known, reciprocal);
    std::string ties;
    for (size_t i = 0; i < pred.tied.size(); ++i)
        ties += (i ? " " : "") + std::to_string(pred.tied[i]);
    Encoding enc = reciprocal ? Encoding::Half : Encoding::Full;
    if (tsv) {
        std::printf("# columns: degree\thouse\tdivisor\tties\tpoly\n");
        std::printf("%d\t%s\t%d\t%s\t%s\n", degree, fmt(pred.house).c_str(),
                    pred.divisor, ties.c_str(),
                    format_poly(pred.poly, enc).c_str());
    } else {
        kv("degree", std::to_string(degree));
        kv("reciprocal", reciprocal ? "yes" : "no");
        kv("house", fmt(pred.house));
        kv("divisor", std::to_string(pred.divisor));
        kv("ties", ties);
        kv("poly", format_poly(pred.poly, enc));
    }
    return 0;
}

int run_generate(int degree, bool failed_family, bool tsv) {
    const char* family =
        failed_family ? "failed-generalization" : "prime-5-mod-6";
    IntPolynomial p = failed_family ? failed_generalization_quotient(degree)
                                    : generate_prime5mod6(degree);
    auto [h, err] = house(p);
    (void)err;
    double ph = powerhouse(h, p.degree());
    if (tsv) {
        std::printf("# columns: family\tdegree\thouse\tpowerhouse\tpoly\n");
        std::printf("%s\t%d\t%s\t%s\t%s\n", family, p.degree(),
                    fmt(h).c_str(), fmt(ph).c_str(),
                    format_poly(p, Encoding::Full).c_str());
    } else {
        kv("family", family);
        kv("degree", std::to_string(p.degree()));
        kv("house", fmt(h));
        kv("powerhouse", fmt(ph));
        kv("poly", format_poly(p, Encoding::Full));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "polyhouse: certified house and Mahler-measure computation for "
        "integer polynomials, exhaustive extremal searches over reciprocal "
        "polynomials, closed-form bounds, and verification of the bundled "
        "reference tables"};
    app.require_subcommand(1);
    int rc = 0;

    // house
    auto* house_cmd = app.add_subcommand(
        "house", "certified largest root modulus (prints the value alone)");
    auto house_in = std::make_shared<PolyInput>();
    house_in->attach(house_cmd);
    auto house_tsv = std::make_shared<bool>(false);
    house_cmd->add_flag("--tsv", *house_tsv, "tab-separated output");
    house_cmd->callback([&rc, house_in, house_tsv] {
        rc = run_house(*house_in, *house_tsv);
    });

    // measure
    auto* measure_cmd = app.add_subcommand(
        "measure", "house, Mahler measure and root count outside |z| = 1");
    auto measure_in = std::make_shared<PolyInput>();
    measure_in->attach(measure_cmd);
    auto measure_tsv = std::make_shared<bool>(false);
    measure_cmd->add_flag("--tsv", *measure_tsv, "tab-separated output");
    measure_cmd->callback([&rc, measure_in, measure_tsv] {
        rc = run_measure(*measure_in, *measure_tsv);
    });

    // classify
    auto* classify_cmd = app.add_subcommand(
        "classify",
        "root-of-unity / reducible / candidate, with a verified witness");
    auto classify_in = std::make_shared<PolyInput>();
    classify_in->attach(classify_cmd);
    auto classify_tsv = std::make_shared<bool>(false);
    classify_cmd->add_flag("--tsv", *classify_tsv, "tab-separated output");
    classify_cmd->callback([&rc, classify_in, classify_tsv] {
        rc = run_classify(*classify_in, *classify_tsv);
    });

    // bounds
    auto* bounds_cmd = app.add_subcommand(
        "bounds", "closed-form lower bounds and the upper witness for a degree");
    auto bounds_degree = std::make_shared<int>(0);
    auto bounds_recip = std::make_shared<bool>(false);
    auto bounds_tsv = std::make_shared<bool>(false);
    bounds_cmd->add_option("--degree", *bounds_degree, "degree d >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    bounds_cmd->add_flag("--reciprocal", *bounds_recip,
                         "bounds for reciprocal algebraic integers");
    bounds_cmd->add_flag("--tsv", *bounds_tsv, "tab-separated output");
    bounds_cmd->callback([&rc, bounds_degree, bounds_recip, bounds_tsv] {
        rc = run_bounds(*bounds_degree, *bounds_recip, *bounds_tsv);
    });

    // search
    auto* search_cmd = app.add_subcommand(
        "search",
        "exhaustive extremal search over monic reciprocal polynomials");
    auto sa = std::make_shared<SearchArgs>();
    search_cmd->add_option("--degree", sa->degree, "even degree >= 2")
        ->required();
    search_cmd->add_option(
        "--height", sa->height,
        "interior coefficient bound (default: 3 through degree 10, 2 "
        "through 20, 1 beyond)");
    search_cmd->add_option("--threshold", sa->threshold,
                           "collect every candidate with house below this "
                           "value (default 1.3)");
    search_cmd->add_option("--shard", sa->shard,
                           "i/n: run worker i of n over its slice only "
                           "(0-based; combine slices with --jobs instead for "
                           "a merged result)");
    search_cmd->add_option("--checkpoint", sa->checkpoint,
                           "checkpoint file; relative paths resolve under "
                           "$POLYHOUSE_CHECKPOINT_DIR");
    search_cmd->add_flag("--no-prune", sa->no_prune,
                         "disable the lemma and real-root pruning (slower, "
                         "identical results)");
    search_cmd->add_flag("--skip-nonprimitive", sa->skip_nonprimitive,
                         "skip specs that are polynomials in x^k, k >= 2");
    search_cmd->add_option("--jobs", sa->jobs,
                           "worker threads; the space is split into this "
                           "many shards and merged deterministically")
        ->check(CLI::PositiveNumber);
    search_cmd->add_flag("--tsv", sa->tsv, "tab-separated candidate rows");
    search_cmd->callback([&rc, sa] { rc = run_search(*sa); });

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "recompute every cell of the bundled reference tables");
    auto va = std::make_shared<VerifyArgs>();
    verify_cmd
        ->add_option("--table", va->table, "T1..T8 or all (default all)")
        ->check(CLI::IsMember(
            {"T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "all"}));
    verify_cmd->add_option("--data", va->data_dir,
                           "table data directory (default: bundled data, "
                           "overridable via POLYHOUSE_DATA)");
    verify_cmd->add_flag("--conjectures", va->conjectures,
                         "also print the conjecture-evidence report "
                         "(informational; never changes the exit code)");
    verify_cmd->add_flag("--strict", va->strict,
                         "fail on documented data artifacts too (see the "
                         "data file headers; default tolerates them)");
    verify_cmd->add_flag("--tsv", va->tsv, "tab-separated report");
    verify_cmd->callback([&rc, va] { rc = run_verify(*va); });

    // predict
    auto* predict_cmd = app.add_subcommand(
        "predict",
        "cheapest nonprimitive candidate for a composite degree, built from "
        "the bundled extremal records of the proper divisors");
    auto predict_degree = std::make_shared<int>(0);
    auto predict_recip = std::make_shared<bool>(false);
    auto predict_data = std::make_shared<std::string>();
    auto predict_tsv = std::make_shared<bool>(false);
    predict_cmd->add_option("--degree", *predict_degree, "composite degree")
        ->required()
        ->check(CLI::PositiveNumber);
    predict_cmd->add_flag("--reciprocal", *predict_recip,
                          "restrict to even divisors / reciprocal records");
    predict_cmd->add_option("--data", *predict_data,
                            "table data directory (default: bundled data)");
    predict_cmd->add_flag("--tsv", *predict_tsv, "tab-separated output");
    predict_cmd->callback(
        [&rc, predict_degree, predict_recip, predict_data, predict_tsv] {
            rc = run_predict(*predict_degree, *predict_recip, *predict_data,
                             *predict_tsv);
        });

    // generate
    auto* generate_cmd = app.add_subcommand(
        "generate",
        "closed-form families: the d = 5 (mod 6) small-house family, or the "
        "quotient family that fails to generalize (--failed)");
    auto generate_degree = std::make_shared<int>(0);
    auto generate_failed = std::make_shared<bool>(false);
    auto generate_tsv = std::make_shared<bool>(false);
    generate_cmd->add_option("--degree", *generate_degree, "target degree")
        ->required()
        ->check(CLI::PositiveNumber);
    generate_cmd->add_flag("--failed", *generate_failed,
                           "generate the d = 7 (mod 12) quotient instead; "
                           "exits 1 where the division stops being exact");
    generate_cmd->add_flag("--tsv", *generate_tsv, "tab-separated output");
    generate_cmd->callback([&rc, generate_degree, generate_failed,
                            generate_tsv] {
        rc = run_generate(*generate_degree, *generate_failed, *generate_tsv);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "run 'polyhouse <subcommand> --help' for the synopsis\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
