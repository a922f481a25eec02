#include "exw/report_json.hpp"

namespace exw {

json make_envelope(const std::string& command, json config, json result, json counts,
                   json witnesses, json violations, double elapsed_ms) {
    json envelope;
    envelope["command"] = command;
    envelope["config"] = std::move(config);
    envelope["result"] = std::move(result);
    envelope["counts"] = std::move(counts);
    envelope["witnesses"] = std::move(witnesses);
    envelope["violations"] = std::move(violations);
    envelope["elapsed_ms"] = elapsed_ms;
    return envelope;
}

json strip_elapsed(json envelope) {
    envelope.erase("elapsed_ms");
    return envelope;
}

std::string split_name(SplitKind split) {
    return split == SplitKind::LeftShort ? "left-short" : "left-long";
}

json to_json(const SquareOccurrence& occ) {
    return json{{"start", occ.start}, {"half", occ.half}};
}

json to_json(const AbelianSquareOccurrence& occ) {
    return json{{"start", occ.start}, {"half", occ.half}};
}

json to_json(const AlmostSquareOccurrence& occ) {
    return json{{"start", occ.start},
                {"length", occ.length},
                {"split", split_name(occ.split)},
                {"valid_left_short", occ.valid_left_short},
                {"valid_left_long", occ.valid_left_long}};
}

json to_json(const PatternWitness& witness, const Alphabet& a) {
    json assignment = json::array();
    for (const Word& piece : witness.realization.assignment)
        assignment.push_back(render_word(piece, a));
    return json{{"start", witness.start},
                {"length", witness.length},
                {"boundaries", witness.realization.boundaries},
                {"assignment", std::move(assignment)}};
}

json to_json(const SearchReport& report, const Alphabet& a) {
    json counts = json::array();
    for (const LengthCount& lc : report.examined)
        counts.push_back(json{{"length", lc.length}, {"examined", lc.examined}});
    json witnesses = json::array();
    for (const Word& w : report.witnesses) witnesses.push_back(render_word(w, a));
    json result;
    result["predicate"] = report.predicate;
    result["k"] = report.alphabet_size;
    result["max_len"] = report.max_len;
    result["minimal_length"] =
        report.minimal_length ? json(*report.minimal_length) : json(nullptr);
    result["complete"] = report.complete;
    result["complete_through"] = report.complete_through;
    result["nodes"] = report.nodes;
    return json{{"result", std::move(result)},
                {"counts", std::move(counts)},
                {"witnesses", std::move(witnesses)}};
}

json to_json(const VerificationReport& report) {
    json violations = json::array();
    for (const Violation& v : report.violations)
        violations.push_back(json{{"detail", v.detail}, {"data", v.data}});
    json evidence = json::array();
    for (const Violation& v : report.evidence)
        evidence.push_back(json{{"detail", v.detail}, {"data", v.data}});
    json result;
    result["claim"] = report.claim;
    result["corpus"] = report.corpus;
    result["instances"] = report.instances;
    result["violation_count"] = report.violations.size();
    result["evidence"] = std::move(evidence);
    result["max_stats"] = report.max_stats;
    result["min_stats"] = report.min_stats;
    return json{{"result", std::move(result)}, {"violations", std::move(violations)}};
}

} // namespace exw
