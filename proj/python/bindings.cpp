// Python bindings for the main operations. Polynomials cross the boundary
// as descending coefficient lists (the same convention as the text formats);
// richer results come back as small dicts. std::invalid_argument maps to
// ValueError and std::runtime_error to RuntimeError, so the CLI's error
// taxonomy carries over.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyhouse/algebra.hpp"
#include "polyhouse/bounds.hpp"
#include "polyhouse/corpus.hpp"
#include "polyhouse/poly.hpp"
#include "polyhouse/roots.hpp"
#include "polyhouse/search.hpp"

namespace py = pybind11;
using namespace polyhouse;

namespace {

using Coeffs = std::vector<Coeff>;

IntPolynomial from_desc(const Coeffs& descending) {
    return IntPolynomial(Coeffs(descending.rbegin(), descending.rend()));
}

Coeffs to_desc(const IntPolynomial& p) {
    return Coeffs(p.c.rbegin(), p.c.rend());
}

Encoding encoding_of(const std::string& name) {
    if (name == "full") return Encoding::Full;
    if (name == "half") return Encoding::Half;
    throw std::invalid_argument("encoding must be 'full' or 'half'");
}

TableId table_of(const std::string& name) {
    static const std::map<std::string, TableId> ids = {
        {"T1", TableId::T1}, {"T2", TableId::T2}, {"T3", TableId::T3},
        {"T4", TableId::T4}, {"T5", TableId::T5}, {"T6", TableId::T6},
        {"T7", TableId::T7}, {"T8", TableId::T8}};
    auto it = ids.find(name);
    if (it == ids.end())
        throw std::invalid_argument("unknown table id '" + name +
                                    "' (use T1..T8)");
    return it->second;
}

py::dict summary_dict(const RootSummary& s) {
    py::dict d;
    d["house"] = s.house;
    d["house_error"] = s.house_error;
    d["nu"] = s.nu;
    d["mahler"] = s.mahler;
    py::list roots;
    for (const auto& r : s.roots) roots.append(py::make_tuple(r.z, r.radius));
    d["roots"] = std::move(roots);
    return d;
}

py::dict record_dict(const ExtremalRecord& r) {
    py::dict d;
    d["degree"] = r.degree;
    d["height"] = r.height;
    d["threshold"] = r.threshold;
    d["found"] = r.found;
    d["best_house"] = r.found ? py::object(py::float_(r.best_house))
                              : py::object(py::none());
    d["best_poly"] = r.found ? py::object(py::cast(to_desc(r.best_poly)))
                             : py::object(py::none());
    d["nu"] = r.nu;
    py::list ties;
    for (const auto& t : r.ties) ties.append(to_desc(t));
    d["ties"] = std::move(ties);
    py::list cands;
    for (const auto& c : r.candidates_below_threshold) {
        py::dict row;
        row["poly"] = to_desc(c.poly);
        row["house"] = c.house;
        row["nu"] = c.nu;
        cands.append(std::move(row));
    }
    d["candidates"] = std::move(cands);
    d["emitted"] = r.emitted;
    d["classified"] = r.classified;
    return d;
}

}  // namespace

PYBIND11_MODULE(_polyhouse, m) {
    m.doc() =
        "Certified house of integer polynomials, exact classification "
        "gates, closed-form bounds, exhaustive minimal-house search over "
        "reciprocal polynomials, and the reference-table verifier. "
        "Polynomials are lists of integer coefficients, highest degree "
        "first.";

    // ---- polynomials -------------------------------------------------------
    m.def(
        "parse",
        [](const std::string& text, const std::string& encoding) {
            return to_desc(parse_poly(text, encoding_of(encoding)));
        },
        py::arg("text"), py::arg("encoding") = "full",
        "Parse 'full' (all coefficients, highest first) or 'half' (monic "
        "palindromic shorthand) text into a coefficient list.");
    m.def(
        "format",
        [](const Coeffs& poly, const std::string& encoding) {
            return format_poly(from_desc(poly), encoding_of(encoding));
        },
        py::arg("poly"), py::arg("encoding") = "full");
    m.def(
        "is_reciprocal",
        [](const Coeffs& poly) { return is_reciprocal(from_desc(poly)); },
        py::arg("poly"));
    m.def(
        "compose_power",
        [](const Coeffs& poly, int k) {
            return to_desc(compose_power(from_desc(poly), k));
        },
        py::arg("poly"), py::arg("k"), "Coefficients of P(x^k).");
    m.def(
        "negate_argument",
        [](const Coeffs& poly) {
            return to_desc(negate_argument(from_desc(poly)));
        },
        py::arg("poly"), "Coefficients of P(-x), sign-normalized.");
    m.def(
        "primitivity_decompose",
        [](const Coeffs& poly) {
            auto [q, k] = primitivity_decompose(from_desc(poly));
            return py::make_tuple(to_desc(q), k);
        },
        py::arg("poly"),
        "(Q, k) with P(x) = Q(x^k) and k maximal; k == 1 iff P is "
        "primitive.");

    // ---- certified numerics ------------------------------------------------
    m.def(
        "house",
        [](const Coeffs& poly) {
            auto [v, e] = house(from_desc(poly));
            return py::make_tuple(v, e);
        },
        py::arg("poly"),
        "(value, error) with |value - true house| <= error.");
    m.def(
        "mahler_measure",
        [](const Coeffs& poly) { return mahler_measure(from_desc(poly)); },
        py::arg("poly"));
    m.def(
        "count_outside_unit",
        [](const Coeffs& poly) { return count_outside_unit(from_desc(poly)); },
        py::arg("poly"),
        "Exact number of roots with |z| > 1 (square-free input).");
    m.def(
        "analyze",
        [](const Coeffs& poly, double tol) {
            return summary_dict(analyze(from_desc(poly), tol));
        },
        py::arg("poly"), py::arg("tol") = 1e-13,
        "house + mahler + nu + certified roots in one pass.");

    // ---- exact gates -------------------------------------------------------
    m.def(
        "minimal_gate",
        [](const Coeffs& poly) {
            Classification c = minimal_gate(from_desc(poly));
            py::dict d;
            d["kind"] = c.kind == Kind::RootOfUnity ? "root-of-unity"
                        : c.kind == Kind::Reducible ? "reducible"
                                                    : "candidate";
            d["factor"] = c.factor ? py::object(py::cast(to_desc(*c.factor)))
                                   : py::object(py::none());
            d["cyclotomic_indices"] = c.cyclotomic_indices;
            return d;
        },
        py::arg("poly"),
        "Classify: product of cyclotomics, reducible (with verified "
        "factor), or candidate minimal polynomial with house > 1.");
    m.def(
        "is_irreducible",
        [](const Coeffs& poly) { return is_irreducible(from_desc(poly)); },
        py::arg("poly"));

    // ---- bounds and generators ---------------------------------------------
    m.def("matveev_lower_bound", &matveev_lower_bound, py::arg("d"),
          py::arg("reciprocal"));
    m.def(
        "column_bound",
        [](int d, const std::string& kind) {
            if (kind == "theta32") return column_bound(d, BoundKind::Theta32);
            if (kind == "tau10") return column_bound(d, BoundKind::Tau10);
            if (kind == "sigma8") return column_bound(d, BoundKind::Sigma8);
            throw std::invalid_argument(
                "kind must be 'theta32', 'tau10' or 'sigma8'");
        },
        py::arg("d"), py::arg("kind"));
    m.def("powerhouse", &powerhouse, py::arg("house"), py::arg("d"));
    m.def("constants", [] {
        const ConstantCatalog& c = ConstantCatalog::get();
        py::dict d;
        d["theta"] = c.theta;
        d["sigma"] = c.sigma;
        d["tau"] = c.tau;
        d["U"] = c.U;
        d["theta_poly"] = to_desc(c.theta_poly);
        d["sigma_poly"] = to_desc(c.sigma_poly);
        d["tau_poly"] = to_desc(c.tau_poly);
        return d;
    });
    m.def(
        "match_lemma_pattern",
        [](const Coeffs& poly) -> py::object {
            auto pat = match_lemma_pattern(from_desc(poly));
            if (!pat) return py::none();
            py::dict d;
            d["lemma"] = pat->which == LemmaId::Lemma1   ? 1
                         : pat->which == LemmaId::Lemma2 ? 2
                                                         : 3;
            d["m"] = pat->m;
            d["bound"] = pat->guaranteed_lower_bound;
            return std::move(d);
        },
        py::arg("poly"),
        "None, or the matched boundary pattern and its guaranteed house "
        "lower bound.");
    m.def(
        "verify_lemma_instance",
        [](const Coeffs& poly) {
            IntPolynomial p = from_desc(poly);
            auto pat = match_lemma_pattern(p);
            if (!pat)
                throw std::invalid_argument(
                    "polynomial does not match any lemma pattern");
            CertifiedRealRoot r = verify_lemma_instance(*pat, p);
            return py::make_tuple(r.value, r.lo, r.hi);
        },
        py::arg("poly"),
        "(root, lo, hi): certified real root inside the lemma bracket.");
    m.def(
        "generate_prime5mod6",
        [](int d) { return to_desc(generate_prime5mod6(d)); }, py::arg("d"));
    m.def(
        "failed_generalization_quotient",
        [](int d) { return to_desc(failed_generalization_quotient(d)); },
        py::arg("d"));
    m.def(
        "composite_prediction",
        [](int d, const std::map<int, Coeffs>& known, bool reciprocal) {
            std::map<int, DivisorRecord> records;
            for (const auto& [b, coeffs] : known) {
                IntPolynomial p = from_desc(coeffs);
                records.emplace(b,
                                DivisorRecord{p, polyhouse::house(p).first});
            }
            CompositePrediction pred =
                composite_prediction(d, records, reciprocal);
            py::dict out;
            out["poly"] = to_desc(pred.poly);
            out["house"] = pred.house;
            out["divisor"] = pred.divisor;
            out["tied"] = pred.tied;
            return out;
        },
        py::arg("d"), py::arg("known"), py::arg("reciprocal"),
        "Cheapest nonprimitive candidate of degree d from the given "
        "{divisor: polynomial} records.");
    m.def(
        "upper_bound_witness",
        [](int d, bool reciprocal) {
            auto [p, v] = upper_bound_witness(d, reciprocal);
            return py::make_tuple(to_desc(p), v);
        },
        py::arg("d"), py::arg("reciprocal"));

    // ---- search ------------------------------------------------------------
    m.def("default_height_for_degree", &default_height_for_degree,
          py::arg("d"));
    m.def(
        "search_extremal",
        [](int degree, std::optional<int> height, double threshold,
           bool prune, bool skip_nonprimitive, int shard_index,
           int shard_total) {
            SearchConfig cfg;
            cfg.degree = degree;
            cfg.height = height ? *height : default_height_for_degree(degree);
            cfg.threshold = threshold;
            cfg.prune_lemmas = prune;
            cfg.prune_real_root = prune;
            cfg.skip_nonprimitive = skip_nonprimitive;
            cfg.shard_index = shard_index;
            cfg.shard_total = shard_total;
            ExtremalRecord r;
            {
                py::gil_scoped_release release;
                r = search_extremal(cfg);
            }
            return record_dict(r);
        },
        py::arg("degree"), py::arg("height") = py::none(),
        py::arg("threshold") = 1.3, py::arg("prune") = true,
        py::arg("skip_nonprimitive") = false, py::arg("shard_index") = 0,
        py::arg("shard_total") = 1,
        "Exhaustive minimal-house search over monic palindromic "
        "polynomials of the given even degree and height.");

    // ---- reference tables --------------------------------------------------
    m.def(
        "verify_table",
        [](const std::string& table, const std::string& data_dir) {
            Corpus corpus = Corpus::load(data_dir);
            VerifyReport rep = verify_table(corpus, table_of(table));
            py::dict d;
            d["pass"] = rep.pass;
            d["pass_documented"] = rep.pass_documented;
            d["checked"] = rep.checked;
            d["failed"] = rep.failed;
            py::list failures;
            auto add = [&](const CheckFailure& f) {
                py::dict fd;
                fd["check"] = f.check;
                fd["message"] = f.message;
                fd["degree"] = f.degree;
                fd["row"] = f.row_index;
                fd["documented"] = f.documented;
                failures.append(std::move(fd));
            };
            for (const auto& row : rep.rows)
                for (const auto& f : row.failures) add(f);
            for (const auto& f : rep.summary_failures) add(f);
            d["failures"] = std::move(failures);
            d["notes"] = rep.notes;
            return d;
        },
        py::arg("table"), py::arg("data_dir") = "",
        "Recompute every verifiable cell of one reference table. "
        "pass_documented ignores failures that match known data "
        "artifacts; pass does not.");
    m.def(
        "conjecture_evidence",
        [](const std::string& data_dir) {
            Corpus corpus = Corpus::load(data_dir);
            py::list out;
            for (const auto& it : check_conjecture_evidence(corpus)) {
                py::dict d;
                d["conjecture"] = it.conjecture;
                d["instance"] = it.instance;
                d["holds"] = it.holds;
                d["note"] = it.note;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("data_dir") = "");
}
