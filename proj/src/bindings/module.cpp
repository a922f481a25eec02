#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exw/bounds.hpp"
#include "exw/extremal.hpp"
#include "exw/pattern.hpp"
#include "exw/repetition.hpp"
#include "exw/word.hpp"

namespace py = pybind11;

namespace {

exw::Word parse(const std::string& text, int k) { return exw::parse_word(text, exw::Alphabet(k)); }

int infer_k(const std::string& text, int k) {
    if (k > 0) return k;
    if (text.find(',') != std::string::npos) {
        const exw::Word w = parse(text, 100000);
        return std::max(1, w.max_letter() + 1);
    }
    const exw::Word w = parse(text, 26);
    return std::max(1, w.max_letter() + 1);
}

py::object opt_pair(const std::optional<exw::SquareOccurrence>& occ) {
    if (!occ) return py::none();
    return py::make_tuple(occ->start, occ->half);
}

py::dict report_dict(const exw::VerificationReport& rep) {
    py::dict d;
    d["claim"] = rep.claim;
    d["corpus"] = rep.corpus;
    d["instances"] = rep.instances;
    d["passed"] = rep.passed();
    py::list violations;
    for (const auto& v : rep.violations) violations.append(v.detail);
    d["violations"] = violations;
    py::list evidence;
    for (const auto& v : rep.evidence) evidence.append(v.detail);
    d["evidence"] = evidence;
    d["max_stats"] = rep.max_stats;
    d["min_stats"] = rep.min_stats;
    return d;
}

std::vector<std::string> render_all(const std::vector<exw::Word>& words, int k) {
    const exw::Alphabet a(k);
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(exw::render_word(w, a));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Extremal pattern-avoiding word laboratory";

    py::register_exception<exw::ResourceLimit>(m, "ResourceLimitError");

    m.def("zimin", [](int n) { return exw::zimin(n).render(); }, py::arg("n"));
    m.def("family_pattern", [](int t) { return exw::family_pattern(t).render(); }, py::arg("t"));
    m.def("is_unavoidable",
          [](const std::string& pattern) { return exw::is_unavoidable(exw::Pattern::parse(pattern)); },
          py::arg("pattern"));

    m.def(
        "contains",
        [](const std::string& word, const std::string& pattern, int k) -> py::object {
            const int kk = infer_k(word, k);
            const exw::Alphabet a(kk);
            auto witness = exw::contains(parse(word, kk), exw::Pattern::parse(pattern));
            if (!witness) return py::none();
            py::dict d;
            d["start"] = witness->start;
            d["length"] = witness->length;
            d["boundaries"] = witness->realization.boundaries;
            py::list pieces;
            for (const auto& piece : witness->realization.assignment)
                pieces.append(exw::render_word(piece, a));
            d["assignment"] = pieces;
            return d;
        },
        py::arg("word"), py::arg("pattern"), py::arg("k") = 0);

    m.def(
        "contains_square",
        [](const std::string& word, int k) {
            return opt_pair(exw::contains_square(parse(word, infer_k(word, k))));
        },
        py::arg("word"), py::arg("k") = 0);
    m.def(
        "is_square_free",
        [](const std::string& word, int k) { return exw::is_square_free(parse(word, infer_k(word, k))); },
        py::arg("word"), py::arg("k") = 0);
    m.def(
        "is_abelian_square_free",
        [](const std::string& word, int k) {
            return exw::is_abelian_square_free(parse(word, infer_k(word, k)));
        },
        py::arg("word"), py::arg("k") = 0);

    m.def(
        "almost_squares",
        [](const std::string& word, int k) {
            py::list out;
            for (const auto& occ : exw::enumerate_almost_squares(parse(word, infer_k(word, k)))) {
                py::dict d;
                d["start"] = occ.start;
                d["length"] = occ.length;
                d["split"] = occ.split == exw::SplitKind::LeftShort ? "left-short" : "left-long";
                out.append(d);
            }
            return out;
        },
        py::arg("word"), py::arg("k") = 0);

    m.def(
        "is_extremal",
        [](const std::string& word, const std::string& pattern, int k) {
            return exw::is_extremal(parse(word, k), exw::Pattern::parse(pattern), exw::Alphabet(k))
                .has_value();
        },
        py::arg("word"), py::arg("pattern"), py::arg("k"));
    m.def(
        "is_extremal_square_free",
        [](const std::string& word, int k) {
            return exw::is_extremal_square_free(parse(word, k), exw::Alphabet(k)).has_value();
        },
        py::arg("word"), py::arg("k"));
    m.def(
        "is_extremal_abelian_square_free",
        [](const std::string& word, int k) {
            return exw::is_extremal_abelian_square_free(parse(word, k), exw::Alphabet(k))
                .has_value();
        },
        py::arg("word"), py::arg("k"));

    m.def("count_family_str",
          [](int k, int t) { return exw::count_extremal_family(k, t).str(); }, py::arg("k"),
          py::arg("t"));
    m.def(
        "generate_family",
        [](int k, int t) { return render_all(exw::generate_extremal_family(k, t), k); },
        py::arg("k"), py::arg("t"));
    m.def(
        "enumerate_extremal_bruteforce",
        [](const std::string& pattern, int k, int max_len) {
            const auto r = exw::enumerate_extremal_bruteforce(exw::Pattern::parse(pattern),
                                                              exw::Alphabet(k), max_len);
            py::dict d;
            d["words"] = render_all(r.words, k);
            d["complete"] = r.complete;
            d["nodes"] = r.nodes;
            return d;
        },
        py::arg("pattern"), py::arg("k"), py::arg("max_len"));

    m.def(
        "search_shortest",
        [](const std::string& predicate, int k, int max_len, int parallelism,
           std::uint64_t budget) {
            const auto pred = predicate == "sqf" ? exw::ExtremalPredicate::SquareFree
                                                 : exw::ExtremalPredicate::AbelianSquareFree;
            exw::SearchOptions opts;
            opts.parallelism = parallelism;
            opts.budget = budget;
            const auto rep = exw::search_shortest_extremal(pred, exw::Alphabet(k), max_len, opts);
            py::dict d;
            d["predicate"] = rep.predicate;
            d["k"] = rep.alphabet_size;
            d["minimal_length"] =
                rep.minimal_length ? py::cast(*rep.minimal_length) : py::none();
            d["witnesses"] = render_all(rep.witnesses, k);
            d["complete"] = rep.complete;
            d["complete_through"] = rep.complete_through;
            d["nodes"] = rep.nodes;
            py::list counts;
            for (const auto& lc : rep.examined)
                counts.append(py::make_tuple(lc.length, lc.examined));
            d["examined"] = counts;
            return d;
        },
        py::arg("predicate"), py::arg("k"), py::arg("max_len"), py::arg("parallelism") = 1,
        py::arg("budget") = std::uint64_t{200'000'000});

    m.def(
        "verify_claim",
        [](const std::string& claim, const std::vector<std::string>& words, int k) {
            exw::VerificationReport merged;
            for (const auto& text : words) {
                const int kk = infer_k(text, k);
                const exw::Word w = parse(text, kk);
                exw::VerificationReport rep;
                if (claim == "lemma6") rep = exw::check_lemma6(w);
                else if (claim == "lemma7") rep = exw::verify_lemma7(w);
                else if (claim == "thm8") rep = exw::verify_theorem8(w);
                else if (claim == "lemma9") rep = exw::verify_lemma9(w, exw::Alphabet(kk));
                else if (claim == "thm3") rep = exw::theorem3_audit(w, exw::Alphabet(kk));
                else throw exw::InvalidInput("unknown claim: " + claim);
                exw::merge_reports(merged, rep);
            }
            if (merged.claim.empty()) merged.claim = claim;
            return report_dict(merged);
        },
        py::arg("claim"), py::arg("words"), py::arg("k") = 0);
    m.def(
        "sweep_appendix",
        [](int max_w) { return report_dict(exw::sweep_appendix_claims(max_w)); },
        py::arg("max_w") = 64);
}
