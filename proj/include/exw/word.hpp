#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "exw/errors.hpp"

namespace exw {

using Letter = int;

// Alphabet of k letters, identified by the integers 0..k-1. Rendering is a
// presentation concern only; every algorithm works on letter indices.
class Alphabet {
public:
    explicit Alphabet(int size);
    // Custom render table; must have one token per letter and be injective.
    Alphabet(int size, std::vector<std::string> tokens);

    int size() const { return size_; }
    bool contains(Letter x) const { return 0 <= x && x < size_; }

    // Default tokens: 'a'+x for k <= 26, decimal otherwise.
    std::string token(Letter x) const;
    bool has_custom_tokens() const { return !tokens_.empty(); }

private:
    int size_;
    std::vector<std::string> tokens_;
};

// Immutable finite sequence of letters. The empty word is valid.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](int i) const { return letters_[static_cast<size_t>(i)]; }
    const std::vector<Letter>& letters() const { return letters_; }

    // Contiguous piece [start, start+len).
    Word factor(int start, int len) const;
    // Copy with `x` inserted so that it becomes letter number `position`.
    Word inserted(int position, Letter x) const;
    // Copy with letter number `position` removed.
    Word erased(int position) const;

    Letter max_letter() const; // -1 for the empty word

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

// One-letter insertion descriptor together with the word it produces.
struct ExtensionEvent {
    int position = 0;
    Letter letter = 0;
    Word result;

    bool operator==(const ExtensionEvent&) const = default;
};

// All k*(n+1) insertion events for w over a, ordered by (position, letter).
// Distinct events may produce equal result words.
std::vector<ExtensionEvent> extensions(const Word& w, const Alphabet& a);

Word delete_letter(const Word& w, int position);

// k <= 26: lowercase letters within the first k. k > 26: comma-separated
// integer tokens. parse(render(w)) == w for default render tables.
Word parse_word(std::string_view text, const Alphabet& a);
std::string render_word(const Word& w, const Alphabet& a);

// Image of w under a letter permutation; sigma[x] gives the new letter.
Word rename_letters(const Word& w, const std::vector<Letter>& sigma);

// Lexicographically least image of w over all bijections of its alphabet,
// i.e. the dense relabelling by order of first occurrence.
Word canonical_form(const Word& w);

void require_over(const Word& w, const Alphabet& a);

} // namespace exw
