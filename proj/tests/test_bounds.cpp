#include <cmath>
#include <random>

#include "doctest.h"
#include "exw/bounds.hpp"

using namespace exw;

namespace {

Word w3(const std::string& text) { return parse_word(text, Alphabet(3)); }

Word repeat(Letter x, int count) { return Word{std::vector<Letter>(static_cast<size_t>(count), x)}; }

// seeded random square-free words over k letters, for sampled sweeps
std::vector<Word> sample_square_free(int k, int len, int how_many, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Word> out;
    while (static_cast<int>(out.size()) < how_many) {
        std::vector<Letter> cur;
        int stuck = 0;
        while (static_cast<int>(cur.size()) < len && stuck < 50) {
            const Letter x = static_cast<Letter>(rng() % static_cast<unsigned>(k));
            cur.push_back(x);
            bool square = false;
            const int n = static_cast<int>(cur.size());
            for (int h = 1; 2 * h <= n && !square; ++h) {
                square = true;
                for (int j = 0; j < h; ++j)
                    if (cur[static_cast<size_t>(n - 2 * h + j)] !=
                        cur[static_cast<size_t>(n - h + j)]) {
                        square = false;
                        break;
                    }
            }
            if (square) {
                cur.pop_back();
                ++stuck;
            }
        }
        if (static_cast<int>(cur.size()) == len) out.emplace_back(cur);
    }
    return out;
}

} // namespace

TEST_CASE("nesting configuration invariants") {
    NestingConfiguration cfg{8, 9, 4, 11, 10};
    CHECK(cfg.valid());
    CHECK(cfg.constraint_met());
    CHECK(cfg.ell() == 1);

    CHECK(!NestingConfiguration{8, 10, 4, 11, 11}.valid()); // |W'| must be |W|+-1
    CHECK(!NestingConfiguration{8, 9, 4, 12, 11}.valid());  // lengths must add up
    CHECK(!NestingConfiguration{8, 9, 3, 10, 10}.constraint_met());
    CHECK(!NestingConfiguration{6, 7, 4, 9, 8}.constraint_met()); // |V| > |W|/2
}

TEST_CASE("appendix claims on explicit configurations") {
    // both splits of |W|=8, |W'|=9, |V|=4 satisfy all three claims
    const auto left_long = check_appendix_claims(NestingConfiguration{8, 9, 4, 11, 10});
    CHECK(left_long.passed());
    CHECK(left_long.instances == 1);
    CHECK(left_long.min_stats.at("claim3_left_slack") == 1); // l = 1

    const auto left_short = check_appendix_claims(NestingConfiguration{8, 9, 4, 10, 11});
    CHECK(left_short.passed());
    CHECK(NestingConfiguration{8, 9, 4, 10, 11}.ell() == 2);

    // invalid lengths are rejected, constraint violations are skipped
    CHECK(!NestingConfiguration{8, 9, 5, 11, 11}.valid());
    CHECK_THROWS_AS(check_appendix_claims(NestingConfiguration{8, 9, 5, 11, 11}), InvalidInput);
    const auto skipped = check_appendix_claims(NestingConfiguration{10, 11, 2, 11, 12});
    CHECK(skipped.instances == 0);
    CHECK(skipped.passed());
}

TEST_CASE("appendix sweep has no violations") {
    const auto rep = sweep_appendix_claims(64);
    CHECK(rep.passed());
    CHECK(rep.instances > 0);
    // the boundary corner |V|=4, |W|=8 is part of the sweep and slack stays positive
    CHECK(rep.min_stats.at("claim1_left_slack") >= 1);
    CHECK(rep.min_stats.at("claim2_slack") >= 1);
    CHECK(rep.min_stats.at("claim3_left_slack") >= 1);
    CHECK(rep.min_stats.at("claim3_right_slack") >= 1);

    // merging two sweeps adds instances and keeps extremes
    auto merged = sweep_appendix_claims(32);
    const auto more = sweep_appendix_claims(48);
    const auto alone = sweep_appendix_claims(48);
    merge_reports(merged, more);
    CHECK(merged.instances == sweep_appendix_claims(32).instances + alone.instances);
    CHECK(merged.min_stats.at("claim1_left_slack") ==
          std::min(sweep_appendix_claims(32).min_stats.at("claim1_left_slack"),
                   alone.min_stats.at("claim1_left_slack")));
}

TEST_CASE("nested almost-squares: short words have no configurations") {
    CHECK(lemma6_configurations(w3("aba")).empty()); // needs |W| >= 8
    CHECK(check_lemma6(w3("aba")).instances == 0);
    CHECK(check_lemma6(Word{}).passed());
}

TEST_CASE("nested almost-squares: unary positive control") {
    const Word unary = repeat(0, 21);
    const auto records = lemma6_configurations(unary);
    REQUIRE(!records.empty());
    bool example_found = false;
    for (const auto& rec : records) {
        CHECK(rec.cfg.valid());
        CHECK(rec.cfg.constraint_met());
        REQUIRE(rec.square.has_value()); // the outer factor always has a square
        if (rec.cfg.len_w == 8 && rec.cfg.len_w_prime == 9 && rec.cfg.len_v == 4 &&
            rec.cfg.len_x == 11 && rec.cfg.len_x_prime == 10)
            example_found = true;
    }
    CHECK(example_found); // W=a^8, W'=a^9, V=a^4, X=a^11, X'=a^10
    const auto rep = check_lemma6(unary);
    CHECK(rep.passed());
    CHECK(rep.instances == records.size());
    // each configuration is reported with its square witness
    REQUIRE(rep.evidence.size() == records.size());
    CHECK(rep.evidence[0].data.count("square_start") == 1);
    CHECK(contains_square(unary).has_value());
}

TEST_CASE("nested almost-squares never appear in square-free words (sampled)") {
    // ternary, moderate length
    for (const Word& w : sample_square_free(3, 30, 40, 12345)) {
        CHECK(is_square_free(w));
        CHECK(lemma6_configurations(w).empty());
    }
    // quaternary up to length 25, sampled with a fixed seed
    for (const Word& w : sample_square_free(4, 25, 60, 67890)) {
        CHECK(is_square_free(w));
        CHECK(lemma6_configurations(w).empty());
    }
}

TEST_CASE("per-start almost-square bound") {
    const auto tiny = verify_lemma7(w3("ab"));
    CHECK(tiny.passed());
    CHECK(tiny.instances == 2);
    CHECK(tiny.max_stats.at("max_per_start_count") <= 1);
    // bound at n=2 is 2 log_{5/4} 2 = 6.21...
    CHECK(tiny.min_stats.at("min_margin") > 5.0);

    const Word shortest = w3("abcabacbcabcbabcabacbcabc");
    const auto rep = verify_lemma7(shortest);
    CHECK(rep.passed());
    CHECK(rep.instances == 25);
    const double bound = 2.0 * std::log(25.0) / std::log(1.25);
    CHECK(bound == doctest::Approx(28.8503).epsilon(1e-4));
    CHECK(rep.max_stats.at("max_per_start_count") < bound);
    CHECK(rep.max_stats.at("max_per_start_count") == 5); // counted independently

    CHECK_THROWS_AS(verify_lemma7(w3("a")), ContractViolation);
    CHECK_THROWS_AS(verify_lemma7(w3("aab")), ContractViolation);
}

TEST_CASE("total almost-square bound") {
    const Word shortest = w3("abcabacbcabcbabcabacbcabc");
    const auto rep = verify_theorem8(shortest);
    CHECK(rep.passed());
    // 65 occurrences, bound 2n log_{5/4} n = 721.26
    CHECK(rep.max_stats.at("max_total_count") == 65);
    CHECK(rep.min_stats.at("min_margin") == doctest::Approx(721.2567 - 65).epsilon(1e-3));

    const auto tiny = verify_theorem8(w3("ab"));
    CHECK(tiny.passed());
    CHECK(tiny.max_stats.at("max_total_count") == 2);

    CHECK_THROWS_AS(verify_theorem8(w3("aa")), ContractViolation);
}

TEST_CASE("square-free extensions are distinct") {
    Alphabet a2(2);
    const auto rep = verify_lemma9(parse_word("ab", a2), a2);
    CHECK(rep.passed());
    CHECK(rep.instances == 6);
    CHECK(rep.max_stats.at("duplicate_result_groups") == 2); // "aab" and "abb"

    Alphabet a3(3);
    const auto empty = verify_lemma9(Word{}, a3);
    CHECK(empty.passed());
    CHECK(empty.instances == 3);
    CHECK(empty.max_stats.at("duplicate_result_groups") == 0);
}

TEST_CASE("extremal square-free audit") {
    Alphabet a3(3);
    const Word shortest = w3("abcabacbcabcbabcabacbcabc");
    const auto rep = theorem3_audit(shortest, a3);
    CHECK(rep.passed());
    CHECK(rep.max_stats.at("occurrences_by_position") == 65);
    CHECK(rep.max_stats.at("occurrences_by_position") >= 39); // k(n+1)/2 = 39
    CHECK(rep.max_stats.at("occurrences_as_words") <= 65);
    CHECK(rep.max_stats.at("length_bound") == doctest::Approx(1.18218).epsilon(1e-4));

    Alphabet a1(1);
    const auto unary = theorem3_audit(parse_word("a", a1), a1);
    CHECK(unary.passed()); // k < 3: growth bound outside the hypothesis
    CHECK(unary.corpus.find("skipped") != std::string::npos);
    CHECK(unary.max_stats.at("occurrences_by_position") == 1);

    CHECK_THROWS_AS(theorem3_audit(w3("abc"), a3), ContractViolation); // not extremal
}
