// Command-line surface for the word/pattern library: every operation is
// reachable with reproducible, machine-readable output.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "exw/bounds.hpp"
#include "exw/extremal.hpp"
#include "exw/pattern.hpp"
#include "exw/report_json.hpp"
#include "exw/repetition.hpp"
#include "exw/wordlist.hpp"

namespace {

using exw::json;

struct CommonOpts {
    std::string format = "text";
    std::string out;
    int parallelism = 1;
    std::uint64_t budget = 200'000'000;
    std::int64_t seed = -1; // recorded for sampled corpora; -1 = unset
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out, "Write the report to a file instead of stdout");
    cmd->add_option("--parallelism", opts.parallelism, "Worker threads for tree searches")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    cmd->add_option("--budget", opts.budget, "Search node budget")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 62))
        ->capture_default_str();
    cmd->add_option("--seed", opts.seed, "Seed recorded in the report (reserved for sampling)");
}

// Parallelism is deliberately not echoed: reports are guaranteed identical
// for every parallelism degree, and the bytes must show it.
json common_config(const CommonOpts& opts) {
    json config;
    config["format"] = opts.format;
    config["budget"] = opts.budget;
    config["seed"] = opts.seed < 0 ? json(nullptr) : json(opts.seed);
    return config;
}

class Timer {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

int emit(const CommonOpts& opts, const json& envelope, const std::string& text,
         const std::optional<std::string>& csv, int exit_code) {
    std::string payload;
    if (opts.format == "json") {
        payload = envelope.dump(2);
        payload += '\n';
    } else if (opts.format == "csv") {
        if (!csv) {
            std::cerr << "error: this command has no count table; use --format json or text\n";
            return 2;
        }
        payload = *csv;
    } else {
        payload = text;
    }
    if (opts.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream file(opts.out);
        if (!file) {
            std::cerr << "error: cannot write " << opts.out << "\n";
            return 2;
        }
        file << payload;
    }
    return exit_code;
}

// Parses a word when no alphabet size was given: lowercase letters by
// default, integer tokens (with an inferred alphabet) when commas appear.
exw::Word parse_word_flexible(const std::string& text, std::optional<int> k) {
    if (k) return exw::parse_word(text, exw::Alphabet(*k));
    if (text.find(',') != std::string::npos)
        return exw::parse_word(text, exw::Alphabet(100000));
    return exw::parse_word(text, exw::Alphabet(26));
}

int run_zimin(int n, const CommonOpts& opts) {
    Timer timer;
    const exw::Pattern z = exw::zimin(n);
    json config = common_config(opts);
    config["n"] = n;
    json result;
    result["pattern"] = z.render();
    result["length"] = z.length();
    result["variables"] = z.num_vars();
    const json envelope = exw::make_envelope("zimin", std::move(config), std::move(result),
                                             json::array(), json::array(), json::array(),
                                             timer.elapsed_ms());
    return emit(opts, envelope, z.render() + "\n", std::nullopt, 0);
}

int run_check(const std::string& pattern_text, const std::string& word_text, int k, bool extremal,
              const CommonOpts& opts) {
    Timer timer;
    const exw::Alphabet alphabet(k);
    const exw::Pattern pattern = exw::Pattern::parse(pattern_text);
    const exw::Word word = exw::parse_word(word_text, alphabet);

    json config = common_config(opts);
    config["pattern"] = pattern_text;
    config["word"] = word_text;
    config["k"] = k;
    config["extremal"] = extremal;

    json result;
    json witnesses = json::array();
    bool holds = false;
    std::string text;
    if (!extremal) {
        const auto witness = exw::contains(word, pattern);
        holds = witness.has_value();
        result["contains"] = holds;
        result["witness"] = witness ? exw::to_json(*witness, alphabet) : json(nullptr);
        text = std::string("contains: ") + (holds ? "true" : "false") + "\n";
    } else {
        const auto cert = exw::is_extremal(word, pattern, alphabet);
        holds = cert.has_value();
        result["extremal"] = holds;
        if (cert) {
            result["escape"] = json(nullptr);
            result["witness_count"] = cert->witnesses.size();
            for (const auto& [event, witness] : cert->witnesses) {
                witnesses.push_back(json{{"position", event.position},
                                         {"letter", alphabet.token(event.letter)},
                                         {"result", exw::render_word(event.result, alphabet)},
                                         {"witness", exw::to_json(witness, alphabet)}});
            }
        } else {
            result["witness_count"] = 0;
            if (auto self_witness = exw::contains(word, pattern)) {
                result["escape"] =
                    json{{"reason", "word itself contains the pattern"},
                         {"witness", exw::to_json(*self_witness, alphabet)}};
            } else {
                // deterministic first avoiding extension, (position, letter) order
                json escape = nullptr;
                for (const exw::ExtensionEvent& e : exw::extensions(word, alphabet)) {
                    if (!exw::contains(e.result, pattern)) {
                        escape = json{{"reason", "extension avoids the pattern"},
                                      {"position", e.position},
                                      {"letter", alphabet.token(e.letter)},
                                      {"result", exw::render_word(e.result, alphabet)}};
                        break;
                    }
                }
                result["escape"] = std::move(escape);
            }
        }
        text = std::string("extremal: ") + (holds ? "true" : "false") + "\n";
    }
    const json envelope =
        exw::make_envelope("check", std::move(config), std::move(result), json::array(),
                           std::move(witnesses), json::array(), timer.elapsed_ms());
    return emit(opts, envelope, text, std::nullopt, holds ? 0 : 1);
}

json length_counts(const std::vector<exw::Word>& words) {
    std::map<int, std::uint64_t> by_length;
    for (const auto& w : words) ++by_length[w.size()];
    json counts = json::array();
    for (const auto& [length, count] : by_length)
        counts.push_back(json{{"length", length}, {"count", count}});
    return counts;
}

std::string counts_csv(const json& counts, const std::string& value_key) {
    std::ostringstream out;
    out << "length," << value_key << "\n";
    for (const auto& row : counts)
        out << row["length"].get<int>() << "," << row[value_key].get<std::uint64_t>() << "\n";
    return out.str();
}

int run_enumerate_family(int k, int t, bool brute_force, std::optional<int> max_len,
                         const CommonOpts& opts) {
    Timer timer;
    const exw::Alphabet alphabet(k);
    const int effective_max_len = max_len.value_or(2 * t * k + 2);

    json config = common_config(opts);
    config["k"] = k;
    config["t"] = t;
    config["brute_force"] = brute_force;
    config["max_len"] = effective_max_len;

    std::vector<exw::Word> words;
    bool complete = true;
    std::uint64_t nodes = 0;
    std::string error;
    if (brute_force) {
        const auto r = exw::enumerate_extremal_bruteforce(exw::family_pattern(t), alphabet,
                                                          effective_max_len, opts.budget);
        words = r.words;
        complete = r.complete;
        nodes = r.nodes;
    } else {
        try {
            // the generator materializes every word; cap it independently of
            // the node budget so huge families fail cleanly instead of OOMing
            const std::uint64_t word_cap = std::min<std::uint64_t>(opts.budget, 10'000'000);
            words = exw::generate_extremal_family(k, t, word_cap);
        } catch (const exw::ResourceLimit& e) {
            complete = false;
            error = e.what();
        }
    }

    json witnesses = json::array();
    for (const auto& w : words) witnesses.push_back(exw::render_word(w, alphabet));
    json counts = length_counts(words);
    json result;
    result["count"] = words.size();
    result["complete"] = complete;
    result["nodes"] = nodes;
    result["error"] = error.empty() ? json(nullptr) : json(error);

    std::ostringstream text;
    for (const auto& w : words) text << exw::render_word(w, alphabet) << "\n";
    text << "count: " << words.size() << (complete ? "" : " (incomplete)") << "\n";

    const json envelope =
        exw::make_envelope("enumerate-family", std::move(config), std::move(result),
                           counts, std::move(witnesses), json::array(), timer.elapsed_ms());
    return emit(opts, envelope, text.str(), counts_csv(counts, "count"), complete ? 0 : 3);
}

int run_count_family(int k, int t, const CommonOpts& opts) {
    Timer timer;
    const exw::BigInt count = exw::count_extremal_family(k, t);
    json config = common_config(opts);
    config["k"] = k;
    config["t"] = t;
    json result;
    result["count"] = count.str(); // exact, may exceed JSON number range
    result["k"] = k;
    result["t"] = t;
    const json envelope =
        exw::make_envelope("count-family", std::move(config), std::move(result), json::array(),
                           json::array(), json::array(), timer.elapsed_ms());
    return emit(opts, envelope, count.str() + "\n", std::nullopt, 0);
}

int run_search(const std::string& predicate, int k, int max_len, const CommonOpts& opts) {
    Timer timer;
    const exw::Alphabet alphabet(k);
    const exw::ExtremalPredicate pred = predicate == "sqf"
                                            ? exw::ExtremalPredicate::SquareFree
                                            : exw::ExtremalPredicate::AbelianSquareFree;
    exw::SearchOptions search_opts;
    search_opts.budget = opts.budget;
    search_opts.parallelism = opts.parallelism;
    const exw::SearchReport report = exw::search_shortest_extremal(pred, alphabet, max_len,
                                                                   search_opts);

    json config = common_config(opts);
    config["predicate"] = predicate;
    config["k"] = k;
    config["max_len"] = max_len;

    json parts = exw::to_json(report, alphabet);
    std::ostringstream text;
    text << "predicate: " << report.predicate << ", k=" << k << ", max_len=" << max_len << "\n";
    if (report.minimal_length)
        text << "minimal length: " << *report.minimal_length << "\n";
    else
        text << "minimal length: none found\n";
    for (const auto& w : report.witnesses)
        text << "witness: " << exw::render_word(w, alphabet) << "\n";
    if (!report.complete) text << "incomplete: node budget exhausted\n";

    const json envelope = exw::make_envelope("search-shortest", std::move(config),
                                             parts["result"], parts["counts"],
                                             parts["witnesses"], json::array(),
                                             timer.elapsed_ms());
    return emit(opts, envelope, text.str(), counts_csv(parts["counts"], "examined"),
                report.complete ? 0 : 3);
}

int run_almost_squares(const std::string& word_text, std::optional<int> k,
                       const CommonOpts& opts) {
    Timer timer;
    const exw::Word word = parse_word_flexible(word_text, k);
    const auto occurrences = exw::enumerate_almost_squares(word);

    json config = common_config(opts);
    config["word"] = word_text;
    config["k"] = k ? json(*k) : json(nullptr);

    json occ_json = json::array();
    std::map<int, std::uint64_t> by_length;
    for (const auto& occ : occurrences) {
        occ_json.push_back(exw::to_json(occ));
        ++by_length[occ.length];
    }
    json counts = json::array();
    for (const auto& [length, count] : by_length)
        counts.push_back(json{{"length", length}, {"count", count}});

    json result;
    result["count"] = occurrences.size();
    result["occurrences"] = std::move(occ_json);

    std::ostringstream text;
    for (const auto& occ : occurrences)
        text << "(" << occ.start << ", " << occ.length << ", " << exw::split_name(occ.split)
             << ")\n";
    text << "count: " << occurrences.size() << "\n";

    const json envelope =
        exw::make_envelope("almost-squares", std::move(config), std::move(result), counts,
                           json::array(), json::array(), timer.elapsed_ms());
    return emit(opts, envelope, text.str(), counts_csv(counts, "count"), 0);
}

int run_verify(const std::string& claim, const std::string& corpus_path, std::optional<int> k,
               int max_w, const CommonOpts& opts) {
    Timer timer;
    json config = common_config(opts);
    config["claim"] = claim;
    config["corpus"] = corpus_path.empty() ? json(nullptr) : json(corpus_path);
    config["k"] = k ? json(*k) : json(nullptr);
    config["max_w"] = max_w;

    exw::VerificationReport merged;
    json counts = json::array();
    if (claim == "appendix") {
        merged = exw::sweep_appendix_claims(max_w);
    } else {
        if (corpus_path.empty()) throw exw::InvalidInput("--corpus is required for this claim");
        const exw::WordList list = exw::read_word_list_file(corpus_path, k);
        std::map<int, std::uint64_t> by_length;
        for (const exw::Word& w : list.words) {
            ++by_length[w.size()];
            const int word_k =
                k.value_or(list.alphabet_size.value_or(std::max(1, w.max_letter() + 1)));
            const exw::Alphabet alphabet(word_k);
            exw::VerificationReport rep;
            if (claim == "lemma6") rep = exw::check_lemma6(w);
            else if (claim == "lemma7") rep = exw::verify_lemma7(w);
            else if (claim == "thm8") rep = exw::verify_theorem8(w);
            else if (claim == "lemma9") rep = exw::verify_lemma9(w, alphabet);
            else rep = exw::theorem3_audit(w, alphabet);
            merged.claim = rep.claim;
            rep.corpus.clear();
            exw::merge_reports(merged, rep);
        }
        merged.corpus = "file " + corpus_path + " (" + std::to_string(list.words.size()) +
                        " words)";
        for (const auto& [length, count] : by_length)
            counts.push_back(json{{"length", length}, {"count", count}});
    }
    if (merged.claim.empty()) merged.claim = claim;

    json parts = exw::to_json(merged);
    std::ostringstream text;
    text << "claim: " << merged.claim << "\n";
    text << "instances: " << merged.instances << "\n";
    text << "violations: " << merged.violations.size() << "\n";
    text << (merged.passed() ? "PASS" : "FAIL") << "\n";

    const json envelope = exw::make_envelope("verify", std::move(config), parts["result"], counts,
                                             json::array(), parts["violations"],
                                             timer.elapsed_ms());
    const std::optional<std::string> csv =
        claim == "appendix" ? std::nullopt : std::make_optional(counts_csv(counts, "count"));
    return emit(opts, envelope, text.str(), csv, merged.passed() ? 0 : 1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extremal pattern-avoiding word laboratory"};
    app.require_subcommand(1);

    int zimin_n = 1;
    CommonOpts zimin_opts;
    auto* zimin_cmd = app.add_subcommand("zimin", "Print a Zimin pattern");
    zimin_cmd->add_option("--n", zimin_n, "Zimin index")->required()->check(CLI::Range(1, 24));
    add_common(zimin_cmd, zimin_opts);

    std::string check_pattern;
    std::string check_word;
    int check_k = 0;
    bool check_extremal = false;
    CommonOpts check_opts;
    auto* check_cmd = app.add_subcommand("check", "Pattern containment / extremality check");
    check_cmd->add_option("--pattern", check_pattern, "Pattern text, e.g. XYX")->required();
    check_cmd->add_option("--word", check_word, "Word text")->required();
    check_cmd->add_option("--k", check_k, "Alphabet size")->required()->check(CLI::Range(1, 100000));
    check_cmd->add_flag("--extremal", check_extremal, "Check extremality instead of containment");
    add_common(check_cmd, check_opts);

    int ef_k = 0;
    int ef_t = 0;
    bool ef_brute = false;
    int ef_max_len = -1;
    CommonOpts ef_opts;
    auto* ef_cmd = app.add_subcommand("enumerate-family",
                                      "Extremal X Y_1 X ... X Y_t X-avoiding words");
    ef_cmd->add_option("--k", ef_k, "Alphabet size")->required()->check(CLI::Range(1, 100000));
    ef_cmd->add_option("--t", ef_t, "Family parameter t")->required()->check(CLI::Range(1, 1000));
    ef_cmd->add_flag("--brute-force", ef_brute, "Prefix-pruned exhaustive enumeration");
    ef_cmd->add_option("--max-len", ef_max_len, "Length cap for brute force (default 2tk+2)");
    add_common(ef_cmd, ef_opts);

    int cf_k = 0;
    int cf_t = 0;
    CommonOpts cf_opts;
    auto* cf_cmd = app.add_subcommand("count-family", "Exact count of the extremal family");
    cf_cmd->add_option("--k", cf_k, "Alphabet size")->required()->check(CLI::Range(1, 100000));
    cf_cmd->add_option("--t", cf_t, "Family parameter t")->required()->check(CLI::Range(1, 1000));
    add_common(cf_cmd, cf_opts);

    std::string search_predicate;
    int search_k = 0;
    int search_max_len = 0;
    CommonOpts search_opts;
    auto* search_cmd = app.add_subcommand("search-shortest", "Shortest extremal word search");
    search_cmd->add_option("--predicate", search_predicate, "sqf or abelian")
        ->required()
        ->check(CLI::IsMember({"sqf", "abelian"}));
    search_cmd->add_option("--k", search_k, "Alphabet size")->required()->check(CLI::Range(1, 100));
    search_cmd->add_option("--max-len", search_max_len, "Maximum length to explore")
        ->required()
        ->check(CLI::Range(0, 1000));
    add_common(search_cmd, search_opts);

    std::string as_word;
    int as_k = -1;
    CommonOpts as_opts;
    auto* as_cmd = app.add_subcommand("almost-squares", "Enumerate almost-square occurrences");
    as_cmd->add_option("--word", as_word, "Word text")->required();
    as_cmd->add_option("--k", as_k, "Alphabet size (inferred when omitted)")
        ->check(CLI::Range(1, 100000));
    add_common(as_cmd, as_opts);

    std::string verify_claim;
    std::string verify_corpus;
    int verify_k = -1;
    int verify_max_w = 64;
    CommonOpts verify_opts;
    auto* verify_cmd = app.add_subcommand("verify", "Machine-check a quantitative claim");
    verify_cmd->add_option("--claim", verify_claim, "Claim to check")
        ->required()
        ->check(CLI::IsMember({"lemma6", "lemma7", "thm8", "lemma9", "thm3", "appendix"}));
    verify_cmd->add_option("--corpus", verify_corpus, "Word-list file");
    verify_cmd->add_option("--k", verify_k, "Alphabet size override")->check(CLI::Range(1, 100000));
    verify_cmd->add_option("--max-w", verify_max_w, "Sweep cap on |W| for --claim appendix")
        ->check(CLI::Range(8, 100000));
    add_common(verify_cmd, verify_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (zimin_cmd->parsed()) return run_zimin(zimin_n, zimin_opts);
        if (check_cmd->parsed())
            return run_check(check_pattern, check_word, check_k, check_extremal, check_opts);
        if (ef_cmd->parsed())
            return run_enumerate_family(ef_k, ef_t, ef_brute,
                                        ef_max_len < 0 ? std::nullopt
                                                       : std::make_optional(ef_max_len),
                                        ef_opts);
        if (cf_cmd->parsed()) return run_count_family(cf_k, cf_t, cf_opts);
        if (search_cmd->parsed())
            return run_search(search_predicate, search_k, search_max_len, search_opts);
        if (as_cmd->parsed())
            return run_almost_squares(as_word,
                                      as_k < 0 ? std::nullopt : std::make_optional(as_k),
                                      as_opts);
        if (verify_cmd->parsed())
            return run_verify(verify_claim, verify_corpus,
                              verify_k < 0 ? std::nullopt : std::make_optional(verify_k),
                              verify_max_w, verify_opts);
    } catch (const exw::ResourceLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
