#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exw/extremal.hpp"
#include "exw/repetition.hpp"
#include "exw/word.hpp"

namespace exw {

// Length bookkeeping for a pair of nested almost-squares WW' and
// XX' = WW'V sharing a start.
struct NestingConfiguration {
    int len_w = 0;
    int len_w_prime = 0;
    int len_v = 0;
    int len_x = 0;
    int len_x_prime = 0;

    int ell() const { return len_v - len_x + len_w; }
    bool valid() const;                // the almost-square length invariants
    bool constraint_met() const;       // 4 <= |V| <= |W|/2
};

struct Violation {
    std::string detail;
    std::map<std::string, std::string> data; // structured counterexample fields
};

// Pass/fail evidence for one claim over a corpus. Merging is associative:
// instances add, violations and evidence concatenate, extremes keep the
// max/min. `evidence` holds non-failing findings, e.g. the configuration
// and square witness a positive control is expected to produce.
struct VerificationReport {
    std::string claim;
    std::string corpus;
    std::uint64_t instances = 0;
    std::vector<Violation> violations;
    std::vector<Violation> evidence;
    std::map<std::string, double> max_stats;
    std::map<std::string, double> min_stats;

    bool passed() const { return violations.empty(); }
};

void merge_reports(VerificationReport& into, const VerificationReport& from);

// Claim 1: |W| < |X| < |WW'|; Claim 2: |V| < |X|-1; Claim 3: 0 < l < |W|-1.
// A configuration that fails the 4 <= |V| <= |W|/2 constraint is skipped
// (instances stays 0), not failed.
VerificationReport check_appendix_claims(const NestingConfiguration& cfg);
// Exhaustive sweep over every feasible configuration with len_w <= max_len_w.
VerificationReport sweep_appendix_claims(int max_len_w = 64);

// A nested almost-square pair found in a word, with the square that the
// outer factor must contain.
struct NestingRecord {
    int start = 0;
    int inner_length = 0;
    int outer_length = 0;
    SplitKind inner_split = SplitKind::LeftShort;
    SplitKind outer_split = SplitKind::LeftShort;
    NestingConfiguration cfg;
    std::optional<SquareOccurrence> square; // inside the outer factor, absolute start
};

// All same-start nested pairs with 4 <= |V| <= |W|/2, one record per
// (start, inner length, outer length, inner split, outer split).
std::vector<NestingRecord> lemma6_configurations(const Word& q);

// In a square-free word no configuration may exist at all; in any word a
// found configuration must put a square inside its outer factor.
VerificationReport check_lemma6(const Word& q);

// Per-start almost-square counts stay below 2*log_{5/4}(n). Requires
// n >= 2 and q square-free.
VerificationReport verify_lemma7(const Word& q);

// Total almost-square count stays below 2n*log_{5/4}(n). Same preconditions.
VerificationReport verify_theorem8(const Word& q);

// No two distinct extension events of w may yield the same square-free word.
VerificationReport verify_lemma9(const Word& w, const Alphabet& a);

// For an extremal square-free word: at least k(n+1)/2 almost-square
// occurrences at distinct (start, length), and n > (5/4)^(k/4) when k >= 3.
// Both the occurrence count and the distinct-as-words count are reported.
VerificationReport theorem3_audit(const Word& w, const Alphabet& a);

} // namespace exw
