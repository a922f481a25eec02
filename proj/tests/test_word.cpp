#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "exw/word.hpp"
#include "exw/wordlist.hpp"

using namespace exw;

namespace {

Word w3(const std::string& text) { return parse_word(text, Alphabet(3)); }

// all ternary words of length <= max_len, lexicographic by length
std::vector<Word> all_ternary(int max_len) {
    std::vector<Word> out{Word{}};
    std::vector<std::vector<Letter>> layer{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& prefix : layer)
            for (Letter x = 0; x < 3; ++x) {
                auto word = prefix;
                word.push_back(x);
                out.emplace_back(word);
                next.push_back(std::move(word));
            }
        layer = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("alphabet basics") {
    CHECK_THROWS_AS(Alphabet(0), InvalidInput);
    Alphabet a(3);
    CHECK(a.token(0) == "a");
    CHECK(a.token(2) == "c");
    CHECK_THROWS_AS(a.token(3), OutOfRange);
    Alphabet big(30);
    CHECK(big.token(27) == "27");

    CHECK_THROWS_AS(Alphabet(2, {"x", "x"}), InvalidInput); // not injective
    CHECK_THROWS_AS(Alphabet(2, {"x"}), InvalidInput);      // wrong size
    Alphabet custom(2, {"<0>", "<1>"});
    CHECK(custom.token(1) == "<1>");
}

TEST_CASE("extensions: count, order and duplicate results") {
    Alphabet a2(2);
    const Word ab = parse_word("ab", a2);
    const auto events = extensions(ab, a2);
    REQUIRE(events.size() == 6); // k(n+1)
    // ordered by (position, letter)
    CHECK(events[0].position == 0);
    CHECK(events[0].letter == 0);
    CHECK(events[1].position == 0);
    CHECK(events[1].letter == 1);
    CHECK(events[5].position == 2);
    // (0,'a') and (1,'a') both give "aab"
    CHECK(events[0].result == parse_word("aab", a2));
    CHECK(events[2].result == parse_word("aab", a2));
    CHECK(events[0].result == events[2].result);

    Alphabet a3(3);
    const auto from_empty = extensions(Word{}, a3);
    REQUIRE(from_empty.size() == 3);
    CHECK(render_word(from_empty[0].result, a3) == "a");
    CHECK(render_word(from_empty[1].result, a3) == "b");
    CHECK(render_word(from_empty[2].result, a3) == "c");

    CHECK_THROWS_AS(extensions(w3("abc"), a2), InvalidInput); // letter out of range
}

TEST_CASE("extension count is k(n+1) on a small sweep") {
    for (int k = 1; k <= 4; ++k) {
        Alphabet a(k);
        for (const Word& w : all_ternary(4)) {
            if (w.max_letter() >= k) continue;
            CHECK(extensions(w, a).size() == static_cast<size_t>(k) * (w.size() + 1));
        }
    }
}

TEST_CASE("delete_letter") {
    CHECK(delete_letter(w3("aba"), 1) == w3("aa"));
    CHECK(delete_letter(parse_word("a", Alphabet(1)), 0) == Word{});
    CHECK(delete_letter(w3("ababc"), 4) == w3("abab"));
    CHECK_THROWS_AS(delete_letter(w3("aba"), 3), OutOfRange);
    CHECK_THROWS_AS(delete_letter(Word{}, 0), OutOfRange);
}

TEST_CASE("delete undoes insert") {
    for (const Word& w : all_ternary(4))
        for (int i = 0; i <= w.size(); ++i)
            for (Letter x = 0; x < 3; ++x)
                CHECK(delete_letter(w.inserted(i, x), i) == w);
}

TEST_CASE("parse and render") {
    const std::string shortest = "abcabacbcabcbabcabacbcabc";
    const Word w = w3(shortest);
    CHECK(w.size() == 25);
    CHECK(render_word(w, Alphabet(3)) == shortest);

    CHECK(render_word(parse_word("aabb", Alphabet(2)), Alphabet(2)) == "aabb");

    Alphabet a27(27);
    const Word tokens = parse_word("0,1,26", a27);
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[2] == 26);
    CHECK(render_word(tokens, a27) == "0,1,26");
    CHECK(parse_word("", a27) == Word{});

    CHECK_THROWS_AS(parse_word("abd", Alphabet(3)), InvalidInput); // 'd' outside k=3
    CHECK_THROWS_AS(parse_word("a1b", Alphabet(3)), InvalidInput);
    CHECK_THROWS_AS(parse_word("0,27", a27), InvalidInput);
    CHECK_THROWS_AS(parse_word("0,,1", a27), InvalidInput);
}

TEST_CASE("renaming commutes with extensions and deletion") {
    const std::vector<Letter> sigma{2, 0, 1};
    Alphabet a(3);
    for (const Word& w : all_ternary(3)) {
        const Word renamed = rename_letters(w, sigma);
        const auto lhs = extensions(renamed, a);
        const auto rhs = extensions(w, a);
        REQUIRE(lhs.size() == rhs.size());
        // the event at (position, sigma(letter)) matches the renamed result
        for (const auto& e : rhs) {
            const Word expect = rename_letters(e.result, sigma);
            bool found = false;
            for (const auto& f : lhs)
                if (f.position == e.position && f.letter == sigma[static_cast<size_t>(e.letter)] &&
                    f.result == expect)
                    found = true;
            CHECK(found);
        }
        for (int i = 0; i < w.size(); ++i)
            CHECK(delete_letter(renamed, i) == rename_letters(delete_letter(w, i), sigma));
    }
}

TEST_CASE("canonical form") {
    CHECK(canonical_form(w3("bab")) == w3("aba"));
    CHECK(canonical_form(w3("cba")) == w3("abc"));
    CHECK(canonical_form(Word{}) == Word{});
    // canonical form is a fixed point
    for (const Word& w : all_ternary(4))
        CHECK(canonical_form(canonical_form(w)) == canonical_form(w));
}

TEST_CASE("word list round trip with comments and header") {
    std::stringstream file;
    file << "# corpus comment\n";
    file << "aba\n";
    file << "\n";
    file << "bc\n";
    const WordList list = read_word_list(file);
    REQUIRE(list.words.size() == 2);
    CHECK(list.words[0] == parse_word("aba", Alphabet(26)));
    CHECK(!list.alphabet_size.has_value());

    std::stringstream tokens;
    tokens << "#k=30\n";
    tokens << "0,29\n";
    const WordList tlist = read_word_list(tokens);
    REQUIRE(tlist.alphabet_size == 30);
    REQUIRE(tlist.words.size() == 1);
    CHECK(tlist.words[0][1] == 29);

    std::stringstream out;
    write_word_list(out, tlist.words, Alphabet(30));
    std::stringstream back(out.str());
    CHECK(read_word_list(back).words == tlist.words);

    std::stringstream bad;
    bad << "#k=zero\n";
    CHECK_THROWS_AS(read_word_list(bad), InvalidInput);
}
