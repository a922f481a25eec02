#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exw/word.hpp"

namespace exw {

// Sequence of variables, stored densely renumbered 0..v-1 in order of
// first occurrence, so e.g. "ABA" and "XYX" are the same pattern.
struct Pattern {
    std::vector<int> vars;

    Pattern() = default;
    explicit Pattern(std::vector<int> raw);

    int length() const { return static_cast<int>(vars.size()); }
    int num_vars() const;

    // Text format: concatenated single uppercase letters ("XYX") or
    // '.'-separated multi-character names ("X.Y1.X.Y2.X").
    static Pattern parse(std::string_view text);
    std::string render() const;

    bool operator==(const Pattern&) const = default;
    auto operator<=>(const Pattern&) const = default;
};

// Z_1 = x_1, Z_{n+1} = Z_n x_{n+1} Z_n; length 2^n - 1, n variables.
Pattern zimin(int n);
// zimin(n) read as a word over the n-letter alphabet of its variables.
Word zimin_word(int n);
// X Y_1 X Y_2 X ... X Y_t X: length 2t+1, t+1 variables.
Pattern family_pattern(int t);

// A split of a factor into nonempty pieces, equal variables taking equal
// pieces. `boundaries` holds the r+1 cut offsets relative to the factor.
struct Realization {
    std::vector<int> boundaries;
    std::vector<Word> assignment; // indexed by variable
};

struct PatternWitness {
    int start = 0;
    int length = 0;
    Realization realization;
};

// Whole-word realization. Deterministic first witness: pieces are chosen
// left to right, shorter pieces first.
std::optional<Realization> realizes(const Word& w, const Pattern& p);

// First factor of w realizing p, scanning starts ascending then lengths
// ascending. Within a factor the piece order matches realizes().
std::optional<PatternWitness> contains(const Word& w, const Pattern& p);

// True iff some factor ending exactly at `end` realizes p. Lets avoidance
// checks after appending a letter skip factors of the unextended word.
bool contains_factor_ending_at(const Word& w, const Pattern& p, int end);

struct PatternLimits {
    int max_pattern_length = 15;
    int max_variables = 5;
};

// Zimin test: p is unavoidable iff zimin_word(v) contains p, where v is the
// number of distinct variables of p (the standard index choice for the
// characterization). The containment search is exponential in the worst
// case, hence the hard caps.
bool is_unavoidable(const Pattern& p, const PatternLimits& limits = {});

// Re-checks a realization against its factor: nonempty pieces, equal
// variables mapped to equal pieces, concatenation equal to the factor.
bool realization_valid(const Word& factor, const Pattern& p, const Realization& r);

} // namespace exw
