#include <algorithm>
#include <functional>
#include <optional>

#include "doctest.h"
#include "exw/pattern.hpp"

using namespace exw;

namespace {

Word w3(const std::string& text) { return parse_word(text, Alphabet(3)); }

// Independent oracle: try every factor and every composition into nonempty
// pieces, in the same documented order as the implementation (start
// ascending, length ascending, earlier pieces shorter first).
struct BruteWitness {
    int start;
    int length;
    std::vector<int> boundaries;
};

std::optional<BruteWitness> brute_contains(const Word& w, const Pattern& p) {
    const int n = w.size();
    const int r = p.length();
    for (int start = 0; start + r <= n; ++start) {
        for (int len = r; start + len <= n; ++len) {
            std::vector<int> cuts;
            std::function<bool(int, int)> rec = [&](int pos, int pi) -> bool {
                if (pi == r) return pos == start + len;
                for (int pl = 1; pos + pl + (r - pi - 1) <= start + len; ++pl) {
                    cuts.push_back(pl);
                    // consistency: equal variables get equal pieces
                    bool ok = true;
                    int q = start;
                    std::vector<std::pair<int, int>> pieces;
                    for (size_t i = 0; i < cuts.size() && ok; ++i) {
                        pieces.emplace_back(q, cuts[i]);
                        q += cuts[i];
                    }
                    for (size_t i = 0; i < cuts.size() && ok; ++i)
                        for (size_t j = i + 1; j < cuts.size() && ok; ++j) {
                            if (p.vars[i] != p.vars[j]) continue;
                            if (pieces[i].second != pieces[j].second) {
                                ok = false;
                                break;
                            }
                            for (int c = 0; c < pieces[i].second; ++c)
                                if (w[pieces[i].first + c] != w[pieces[j].first + c]) {
                                    ok = false;
                                    break;
                                }
                        }
                    if (ok && rec(pos + pl, pi + 1)) return true;
                    cuts.pop_back();
                }
                return false;
            };
            if (rec(start, 0)) {
                BruteWitness bw;
                bw.start = start;
                bw.length = len;
                bw.boundaries.push_back(0);
                int acc = 0;
                for (int pl : cuts) {
                    acc += pl;
                    bw.boundaries.push_back(acc);
                }
                return bw;
            }
        }
    }
    return std::nullopt;
}

// dense variable strings of length r (restricted growth), e.g. r=2: 00, 01
std::vector<Pattern> all_patterns_up_to(int max_r) {
    std::vector<Pattern> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int max_used) {
        if (!cur.empty()) out.push_back(Pattern(cur));
        if (static_cast<int>(cur.size()) == max_r) return;
        for (int v = 0; v <= max_used; ++v) {
            cur.push_back(v);
            rec(std::max(max_used, v + 1));
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

TEST_CASE("pattern parse and render") {
    CHECK(Pattern::parse("XYX") == Pattern({0, 1, 0}));
    CHECK(Pattern::parse("ABA") == Pattern::parse("XYX")); // renumbered by first occurrence
    CHECK(Pattern::parse("X.Y1.X.Y2.X") == Pattern({0, 1, 0, 2, 0}));
    CHECK(Pattern::parse("XYX").render() == "XYX");
    CHECK_THROWS_AS(Pattern::parse(""), InvalidInput);
    CHECK_THROWS_AS(Pattern::parse("xyx"), InvalidInput);
    CHECK_THROWS_AS(Pattern::parse("X..Y"), InvalidInput);
    // round trip through text for a few shapes
    for (const Pattern& p : {zimin(3), family_pattern(2), Pattern({0, 0, 1})})
        CHECK(Pattern::parse(p.render()) == p);
}

TEST_CASE("zimin words") {
    CHECK(zimin(1) == Pattern({0}));
    CHECK(zimin(2) == Pattern({0, 1, 0}));
    CHECK(zimin(5).length() == 31); // 2^n - 1
    CHECK(zimin(4).num_vars() == 4);
    CHECK_THROWS_AS(zimin(0), InvalidInput);
    CHECK_THROWS_AS(zimin(25), ResourceLimit);

    // Z_n = Z_{n-1} x_n Z_{n-1}: prefix and suffix
    for (int n = 2; n <= 6; ++n) {
        const auto& big = zimin(n).vars;
        const auto& small = zimin(n - 1).vars;
        CHECK(std::equal(small.begin(), small.end(), big.begin()));
        CHECK(std::equal(small.rbegin(), small.rend(), big.rbegin()));
    }
}

TEST_CASE("family patterns") {
    CHECK(family_pattern(1) == Pattern::parse("XYX"));
    CHECK(family_pattern(2) == Pattern::parse("X.Y1.X.Y2.X"));
    CHECK(family_pattern(3).length() == 7);
    CHECK(family_pattern(3).num_vars() == 4);
    CHECK_THROWS_AS(family_pattern(0), InvalidInput);
}

TEST_CASE("realizes") {
    const auto xyx = Pattern::parse("XYX");
    const auto aba = realizes(w3("aba"), xyx);
    REQUIRE(aba.has_value());
    CHECK(aba->assignment[0] == w3("a"));
    CHECK(aba->assignment[1] == w3("b"));
    CHECK(realization_valid(w3("aba"), xyx, *aba));

    CHECK(!realizes(w3("aa"), xyx)); // three nonempty pieces need length >= 3

    const auto xx = Pattern::parse("XX");
    const auto abab = realizes(w3("abab"), xx);
    REQUIRE(abab.has_value());
    CHECK(abab->assignment[0] == w3("ab"));
    CHECK(abab->boundaries == std::vector<int>{0, 2, 4});
}

TEST_CASE("contains: documented scan order") {
    const auto xyx = Pattern::parse("XYX");
    const Word w = w3("caabaac");
    const auto witness = contains(w, xyx);
    REQUIRE(witness.has_value());
    // brute-force confirms the first hit for (start asc, length asc) is the
    // whole word split c|aabaa|c
    const auto brute = brute_contains(w, xyx);
    REQUIRE(brute.has_value());
    CHECK(witness->start == brute->start);
    CHECK(witness->length == brute->length);
    CHECK(witness->realization.boundaries == brute->boundaries);
    CHECK(witness->start == 0);
    CHECK(witness->length == 7);
    CHECK(witness->realization.assignment[0] == w3("c"));
    CHECK(witness->realization.assignment[1] == w3("aabaa"));

    CHECK(!contains(w3("abc"), Pattern::parse("XX")));
    CHECK(!contains(w3("abcabacbcabcbabcabacbcabc"), Pattern::parse("XX")));
    CHECK(!contains(Word{}, Pattern::parse("X")));
}

TEST_CASE("contains agrees with the brute-force factorization scan") {
    const auto patterns = all_patterns_up_to(4);
    REQUIRE(patterns.size() == 1 + 2 + 5 + 15);
    std::vector<Word> words;
    std::vector<std::vector<Letter>> layer{{}};
    words.emplace_back();
    for (int len = 1; len <= 7; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& prefix : layer)
            for (Letter x = 0; x < 3; ++x) {
                auto word = prefix;
                word.push_back(x);
                words.emplace_back(word);
                next.push_back(std::move(word));
            }
        layer = std::move(next);
    }
    for (const Pattern& p : patterns) {
        for (const Word& w : words) {
            const auto fast = contains(w, p);
            const auto brute = brute_contains(w, p);
            REQUIRE(fast.has_value() == brute.has_value());
            if (fast) {
                CHECK(fast->start == brute->start);
                CHECK(fast->length == brute->length);
                CHECK(fast->realization.boundaries == brute->boundaries);
                CHECK(realization_valid(w.factor(fast->start, fast->length), p,
                                        fast->realization));
            }
        }
    }
}

TEST_CASE("contains is invariant under letter renaming") {
    const std::vector<Letter> sigma{1, 2, 0};
    for (const Pattern& p : {Pattern::parse("XX"), Pattern::parse("XYX"), Pattern::parse("XXY")}) {
        std::vector<std::vector<Letter>> layer{{}};
        for (int len = 1; len <= 6; ++len) {
            std::vector<std::vector<Letter>> next;
            for (const auto& prefix : layer)
                for (Letter x = 0; x < 3; ++x) {
                    auto letters = prefix;
                    letters.push_back(x);
                    const Word w{letters};
                    CHECK(contains(w, p).has_value() ==
                          contains(rename_letters(w, sigma), p).has_value());
                    next.push_back(std::move(letters));
                }
            layer = std::move(next);
        }
    }
}

TEST_CASE("contains_factor_ending_at matches a full scan") {
    const auto patterns = all_patterns_up_to(3);
    std::vector<std::vector<Letter>> layer{{}};
    for (int len = 1; len <= 6; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& prefix : layer)
            for (Letter x = 0; x < 2; ++x) {
                auto letters = prefix;
                letters.push_back(x);
                const Word w{letters};
                for (const Pattern& p : patterns) {
                    bool any = false;
                    for (int start = 0; start + p.length() <= w.size() && !any; ++start) {
                        Word factor = w.factor(start, w.size() - start);
                        if (realizes(factor, p)) any = true;
                    }
                    CHECK(contains_factor_ending_at(w, p, w.size()) == any);
                }
                next.push_back(std::move(letters));
            }
        layer = std::move(next);
    }
}

TEST_CASE("unavoidability via the Zimin test") {
    CHECK(is_unavoidable(Pattern::parse("XYX")));
    CHECK(!is_unavoidable(Pattern::parse("XX")));
    CHECK(is_unavoidable(Pattern::parse("X")));
    for (int t = 1; t <= 3; ++t) CHECK(is_unavoidable(family_pattern(t)));

    // caps fail loudly: 6 distinct variables, and an overlong pattern
    CHECK_THROWS_AS(is_unavoidable(Pattern({0, 1, 2, 3, 4, 5})), ResourceLimit);
    CHECK_THROWS_AS(is_unavoidable(Pattern(std::vector<int>(16, 0))), ResourceLimit);
}
