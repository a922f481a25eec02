#pragma once

#include <optional>
#include <vector>

#include "exw/word.hpp"

namespace exw {

// Factor [start, start+2*half) whose halves are letter-equal.
struct SquareOccurrence {
    int start = 0;
    int half = 0;

    bool operator==(const SquareOccurrence&) const = default;
};

// Reference detector: scans starts ascending, half lengths ascending.
std::optional<SquareOccurrence> contains_square(const Word& w);
bool is_square_free(const Word& w);

// First square in w with `letter` inserted at `position`, restricted to
// spans covering the inserted letter. Requires w square-free (unchecked):
// any other square would lie inside w itself. Matches the first square the
// full scan would report on the extension.
std::optional<SquareOccurrence> square_in_extension(const Word& w, int position, Letter letter);

// Checked fast path for extension events. Throws ContractViolation when w
// is not square-free and InvalidInput when e is not an extension of w.
bool insertion_is_square_free(const Word& w, const ExtensionEvent& e);

enum class SplitKind { LeftShort, LeftLong };

// Odd-length factor of the form W W' where W' is an extension of W
// (left-short, |W'| = |W|+1) or W with one letter deleted (left-long,
// |W'| = |W|-1). Both split kinds can validate for the same factor; such
// occurrences are still counted once per (start, length).
struct AlmostSquareOccurrence {
    int start = 0;
    int length = 0;
    SplitKind split = SplitKind::LeftShort; // first kind that validates
    bool valid_left_short = false;
    bool valid_left_long = false;

    int left_half() const {
        return split == SplitKind::LeftShort ? (length - 1) / 2 : (length + 1) / 2;
    }
};

// Tests the whole word; left-short is tried first.
std::optional<AlmostSquareOccurrence> is_almost_square(const Word& f);
// Same test on the factor [start, start+length) without copying.
std::optional<AlmostSquareOccurrence> almost_square_at(const Word& w, int start, int length);

// All occurrences ordered by (start, length).
std::vector<AlmostSquareOccurrence> enumerate_almost_squares(const Word& q);

// Odd lengths a such that an almost-square of length a starts at `position`.
std::vector<int> almost_square_lengths_at(const Word& q, int position);

// Factor [start, start+2*half) whose halves are permutations of each other.
struct AbelianSquareOccurrence {
    int start = 0;
    int half = 0;

    bool operator==(const AbelianSquareOccurrence&) const = default;
};

// Prefix letter-count tables give O(k) half comparison per candidate.
std::optional<AbelianSquareOccurrence> find_abelian_square(const Word& w);
bool is_abelian_square_free(const Word& w);

// Covering-span fast path, analogous to square_in_extension; requires w
// abelian-square-free (unchecked).
std::optional<AbelianSquareOccurrence> abelian_square_in_extension(const Word& w, int position,
                                                                   Letter letter);

} // namespace exw
