#include "exw/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace exw {

namespace {

constexpr double kLogBase = 1.25; // bounds are stated in log base 5/4

double log_base(double n) { return std::log(n) / std::log(kLogBase); }

void keep_max(std::map<std::string, double>& stats, const std::string& key, double value) {
    auto [it, fresh] = stats.emplace(key, value);
    if (!fresh) it->second = std::max(it->second, value);
}

void keep_min(std::map<std::string, double>& stats, const std::string& key, double value) {
    auto [it, fresh] = stats.emplace(key, value);
    if (!fresh) it->second = std::min(it->second, value);
}

std::string describe_word(const Word& w) {
    const int k = std::max(1, w.max_letter() + 1);
    if (k <= 26) return render_word(w, Alphabet(k));
    return "word of length " + std::to_string(w.size());
}

} // namespace

bool NestingConfiguration::valid() const {
    if (len_w < 0 || len_w_prime < 0 || len_v < 0 || len_x < 0 || len_x_prime < 0) return false;
    if (len_w_prime != len_w - 1 && len_w_prime != len_w + 1) return false;
    if (len_x_prime != len_x - 1 && len_x_prime != len_x + 1) return false;
    return len_w + len_w_prime + len_v == len_x + len_x_prime;
}

bool NestingConfiguration::constraint_met() const { return len_v >= 4 && 2 * len_v <= len_w; }

void merge_reports(VerificationReport& into, const VerificationReport& from) {
    if (into.claim.empty()) into.claim = from.claim;
    if (into.corpus.empty())
        into.corpus = from.corpus;
    else if (!from.corpus.empty() && into.corpus != from.corpus)
        into.corpus += "; " + from.corpus;
    into.instances += from.instances;
    into.violations.insert(into.violations.end(), from.violations.begin(), from.violations.end());
    into.evidence.insert(into.evidence.end(), from.evidence.begin(), from.evidence.end());
    for (const auto& [key, value] : from.max_stats) keep_max(into.max_stats, key, value);
    for (const auto& [key, value] : from.min_stats) keep_min(into.min_stats, key, value);
}

namespace {

void apply_claim_checks(const NestingConfiguration& cfg, VerificationReport& rep) {
    ++rep.instances;
    auto record = [&](const std::string& what) {
        Violation v;
        v.detail = what + " fails for (|W|=" + std::to_string(cfg.len_w) +
                   ", |W'|=" + std::to_string(cfg.len_w_prime) + ", |V|=" +
                   std::to_string(cfg.len_v) + ", |X|=" + std::to_string(cfg.len_x) +
                   ", |X'|=" + std::to_string(cfg.len_x_prime) + ")";
        v.data["len_w"] = std::to_string(cfg.len_w);
        v.data["len_w_prime"] = std::to_string(cfg.len_w_prime);
        v.data["len_v"] = std::to_string(cfg.len_v);
        v.data["len_x"] = std::to_string(cfg.len_x);
        v.data["len_x_prime"] = std::to_string(cfg.len_x_prime);
        v.data["claim"] = what;
        rep.violations.push_back(std::move(v));
    };
    // Claim 1: |W| < |X| < |W|+|W'|
    if (!(cfg.len_w < cfg.len_x && cfg.len_x < cfg.len_w + cfg.len_w_prime)) record("claim1");
    // Claim 2: |V| < |X|-1
    if (!(cfg.len_v < cfg.len_x - 1)) record("claim2");
    // Claim 3: 0 < l < |W|-1
    const int ell = cfg.ell();
    if (!(0 < ell && ell < cfg.len_w - 1)) record("claim3");

    keep_min(rep.min_stats, "claim1_left_slack", cfg.len_x - cfg.len_w);
    keep_min(rep.min_stats, "claim1_right_slack", cfg.len_w + cfg.len_w_prime - cfg.len_x);
    keep_min(rep.min_stats, "claim2_slack", cfg.len_x - 1 - cfg.len_v);
    keep_min(rep.min_stats, "claim3_left_slack", ell);
    keep_min(rep.min_stats, "claim3_right_slack", cfg.len_w - 1 - ell);
}

} // namespace

VerificationReport check_appendix_claims(const NestingConfiguration& cfg) {
    if (!cfg.valid()) throw InvalidInput("nesting configuration violates its length invariants");
    VerificationReport rep;
    rep.claim = "appendix";
    if (!cfg.constraint_met()) {
        rep.corpus = "skipped: constraint 4 <= |V| <= |W|/2 not met";
        return rep;
    }
    rep.corpus = "single configuration";
    apply_claim_checks(cfg, rep);
    return rep;
}

VerificationReport sweep_appendix_claims(int max_len_w) {
    VerificationReport rep;
    rep.claim = "appendix";
    rep.corpus = "all feasible configurations with |W| <= " + std::to_string(max_len_w);
    for (int len_w = 8; len_w <= max_len_w; ++len_w) {
        for (int dw : {-1, +1}) {
            const int len_w_prime = len_w + dw;
            for (int len_v = 4; 2 * len_v <= len_w; ++len_v) {
                const int total = len_w + len_w_prime + len_v;
                if (total % 2 == 0) continue; // no almost-square split exists
                for (int len_x : {(total - 1) / 2, (total + 1) / 2}) {
                    NestingConfiguration cfg;
                    cfg.len_w = len_w;
                    cfg.len_w_prime = len_w_prime;
                    cfg.len_v = len_v;
                    cfg.len_x = len_x;
                    cfg.len_x_prime = total - len_x;
                    apply_claim_checks(cfg, rep);
                }
            }
        }
    }
    return rep;
}

std::vector<NestingRecord> lemma6_configurations(const Word& q) {
    std::vector<NestingRecord> records;
    const int n = q.size();
    // 4 <= |V| <= |W|/2 forces |W| >= 8, so inner occurrences span >= 15.
    for (int start = 0; start + 19 <= n; ++start) {
        std::vector<AlmostSquareOccurrence> occs;
        for (int len = 15; start + len <= n; len += 2)
            if (auto occ = almost_square_at(q, start, len)) occs.push_back(*occ);
        for (size_t i = 0; i < occs.size(); ++i) {
            for (size_t j = i + 1; j < occs.size(); ++j) {
                const int len_v = occs[j].length - occs[i].length;
                if (len_v < 4) continue;
                for (SplitKind inner_kind : {SplitKind::LeftShort, SplitKind::LeftLong}) {
                    const bool inner_ok = inner_kind == SplitKind::LeftShort
                                              ? occs[i].valid_left_short
                                              : occs[i].valid_left_long;
                    if (!inner_ok) continue;
                    const int len_w = inner_kind == SplitKind::LeftShort
                                          ? (occs[i].length - 1) / 2
                                          : (occs[i].length + 1) / 2;
                    if (2 * len_v > len_w) continue;
                    for (SplitKind outer_kind : {SplitKind::LeftShort, SplitKind::LeftLong}) {
                        const bool outer_ok = outer_kind == SplitKind::LeftShort
                                                  ? occs[j].valid_left_short
                                                  : occs[j].valid_left_long;
                        if (!outer_ok) continue;
                        NestingRecord rec;
                        rec.start = start;
                        rec.inner_length = occs[i].length;
                        rec.outer_length = occs[j].length;
                        rec.inner_split = inner_kind;
                        rec.outer_split = outer_kind;
                        rec.cfg.len_w = len_w;
                        rec.cfg.len_w_prime = occs[i].length - len_w;
                        rec.cfg.len_v = len_v;
                        rec.cfg.len_x = outer_kind == SplitKind::LeftShort
                                            ? (occs[j].length - 1) / 2
                                            : (occs[j].length + 1) / 2;
                        rec.cfg.len_x_prime = occs[j].length - rec.cfg.len_x;
                        if (auto sq = contains_square(q.factor(start, occs[j].length))) {
                            sq->start += start;
                            rec.square = sq;
                        }
                        records.push_back(std::move(rec));
                    }
                }
            }
        }
    }
    return records;
}

VerificationReport check_lemma6(const Word& q) {
    VerificationReport rep;
    rep.claim = "lemma6";
    rep.corpus = "single word, n=" + std::to_string(q.size());
    const auto records = lemma6_configurations(q);
    rep.instances = records.size();
    keep_max(rep.max_stats, "configurations", static_cast<double>(records.size()));
    for (const auto& rec : records) {
        Violation v;
        v.data["word"] = describe_word(q);
        v.data["start"] = std::to_string(rec.start);
        v.data["inner_length"] = std::to_string(rec.inner_length);
        v.data["outer_length"] = std::to_string(rec.outer_length);
        v.data["len_w"] = std::to_string(rec.cfg.len_w);
        v.data["len_w_prime"] = std::to_string(rec.cfg.len_w_prime);
        v.data["len_v"] = std::to_string(rec.cfg.len_v);
        v.data["len_x"] = std::to_string(rec.cfg.len_x);
        v.data["len_x_prime"] = std::to_string(rec.cfg.len_x_prime);
        if (rec.square) {
            // the outer factor contains a square, exactly as claimed
            v.detail = "nested almost-squares at start " + std::to_string(rec.start) + " in '" +
                       describe_word(q) + "'; square at " + std::to_string(rec.square->start) +
                       " with half " + std::to_string(rec.square->half);
            v.data["square_start"] = std::to_string(rec.square->start);
            v.data["square_half"] = std::to_string(rec.square->half);
            rep.evidence.push_back(std::move(v));
        } else {
            v.detail = "square-free outer almost-square atop a nested inner one in '" +
                       describe_word(q) + "'";
            rep.violations.push_back(std::move(v));
        }
    }
    return rep;
}

namespace {

void require_square_free_corpus_word(const Word& q, const std::string& who) {
    if (q.size() < 2) throw ContractViolation(who + " requires words of length >= 2");
    if (contains_square(q)) throw ContractViolation(who + " requires a square-free word");
}

} // namespace

VerificationReport verify_lemma7(const Word& q) {
    require_square_free_corpus_word(q, "verify_lemma7");
    VerificationReport rep;
    rep.claim = "lemma7";
    rep.corpus = "single word, n=" + std::to_string(q.size());
    const int n = q.size();
    const double bound = 2.0 * log_base(static_cast<double>(n));
    for (int p = 0; p < n; ++p) {
        ++rep.instances;
        const auto count = static_cast<double>(almost_square_lengths_at(q, p).size());
        keep_max(rep.max_stats, "max_per_start_count", count);
        keep_max(rep.max_stats, "max_ratio", count / bound);
        keep_min(rep.min_stats, "min_margin", bound - count);
        if (!(count < bound)) {
            Violation v;
            v.detail = "per-start almost-square count " + std::to_string(count) +
                       " not below bound " + std::to_string(bound) + " in '" + describe_word(q) +
                       "' at position " + std::to_string(p);
            v.data["word"] = describe_word(q);
            v.data["position"] = std::to_string(p);
            v.data["count"] = std::to_string(static_cast<long long>(count));
            rep.violations.push_back(std::move(v));
        }
    }
    return rep;
}

VerificationReport verify_theorem8(const Word& q) {
    require_square_free_corpus_word(q, "verify_theorem8");
    VerificationReport rep;
    rep.claim = "thm8";
    rep.corpus = "single word, n=" + std::to_string(q.size());
    rep.instances = 1;
    const int n = q.size();
    const double bound = 2.0 * n * log_base(static_cast<double>(n));
    const auto total = static_cast<double>(enumerate_almost_squares(q).size());
    keep_max(rep.max_stats, "max_total_count", total);
    keep_max(rep.max_stats, "max_ratio", total / bound);
    keep_min(rep.min_stats, "min_margin", bound - total);
    if (!(total < bound)) {
        Violation v;
        v.detail = "total almost-square count " + std::to_string(total) + " not below bound " +
                   std::to_string(bound) + " in '" + describe_word(q) + "'";
        v.data["word"] = describe_word(q);
        v.data["count"] = std::to_string(static_cast<long long>(total));
        rep.violations.push_back(std::move(v));
    }
    return rep;
}

VerificationReport verify_lemma9(const Word& w, const Alphabet& a) {
    VerificationReport rep;
    rep.claim = "lemma9";
    rep.corpus = "single word, n=" + std::to_string(w.size());
    std::map<Word, std::vector<ExtensionEvent>> groups;
    for (const ExtensionEvent& e : extensions(w, a)) {
        ++rep.instances;
        groups[e.result].push_back(e);
    }
    double duplicate_groups = 0;
    for (const auto& [result, events] : groups) {
        if (events.size() < 2) continue;
        ++duplicate_groups;
        if (is_square_free(result)) {
            Violation v;
            v.detail = "two distinct insertions into '" + describe_word(w) +
                       "' give the same square-free word '" + describe_word(result) + "'";
            v.data["word"] = describe_word(w);
            v.data["result"] = describe_word(result);
            v.data["first_position"] = std::to_string(events[0].position);
            v.data["second_position"] = std::to_string(events[1].position);
            rep.violations.push_back(std::move(v));
        }
    }
    keep_max(rep.max_stats, "duplicate_result_groups", duplicate_groups);
    return rep;
}

VerificationReport theorem3_audit(const Word& w, const Alphabet& a) {
    if (!is_extremal_square_free(w, a))
        throw ContractViolation("theorem3_audit requires an extremal square-free word");
    VerificationReport rep;
    rep.claim = "thm3";
    const int n = w.size();
    const int k = a.size();
    rep.corpus = "single word, n=" + std::to_string(n) + ", k=" + std::to_string(k);
    rep.instances = 1;

    const auto occs = enumerate_almost_squares(w);
    const auto occurrence_count = static_cast<long long>(occs.size());
    std::set<Word> as_words;
    for (const auto& occ : occs) as_words.insert(w.factor(occ.start, occ.length));

    keep_max(rep.max_stats, "occurrences_by_position", static_cast<double>(occurrence_count));
    keep_max(rep.max_stats, "occurrences_as_words", static_cast<double>(as_words.size()));
    keep_min(rep.min_stats, "count_slack",
             static_cast<double>(2 * occurrence_count - static_cast<long long>(k) * (n + 1)));

    // (a) at least k(n+1)/2 almost-square occurrences
    if (2 * occurrence_count < static_cast<long long>(k) * (n + 1)) {
        Violation v;
        v.detail = "only " + std::to_string(occurrence_count) +
                   " almost-square occurrences, need at least " + std::to_string(k) + "*" +
                   std::to_string(n + 1) + "/2 in '" + describe_word(w) + "'";
        v.data["word"] = describe_word(w);
        v.data["count"] = std::to_string(occurrence_count);
        rep.violations.push_back(std::move(v));
    }
    // (b) length lower bound, only inside the k >= 3 hypothesis
    if (k >= 3) {
        const double bound = std::pow(5.0 / 4.0, k / 4.0);
        keep_max(rep.max_stats, "length_bound", bound);
        if (!(static_cast<double>(n) > bound)) {
            Violation v;
            v.detail = "length " + std::to_string(n) + " not above (5/4)^(k/4) = " +
                       std::to_string(bound) + " for '" + describe_word(w) + "'";
            v.data["word"] = describe_word(w);
            rep.violations.push_back(std::move(v));
        }
    } else {
        rep.corpus += " (growth bound skipped: k < 3)";
    }
    return rep;
}

} // namespace exw
