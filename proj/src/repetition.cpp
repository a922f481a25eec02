#include "exw/repetition.hpp"

#include <algorithm>

namespace exw {

std::optional<SquareOccurrence> contains_square(const Word& w) {
    const int n = w.size();
    for (int s = 0; s < n; ++s) {
        const int max_half = (n - s) / 2;
        for (int h = 1; h <= max_half; ++h) {
            bool equal = true;
            for (int j = 0; j < h; ++j) {
                if (w[s + j] != w[s + h + j]) {
                    equal = false;
                    break;
                }
            }
            if (equal) return SquareOccurrence{s, h};
        }
    }
    return std::nullopt;
}

bool is_square_free(const Word& w) { return !contains_square(w).has_value(); }

std::optional<SquareOccurrence> square_in_extension(const Word& w, int position, Letter letter) {
    const int m = w.size() + 1;
    auto at = [&](int i) -> Letter {
        if (i < position) return w[i];
        if (i == position) return letter;
        return w[i - 1];
    };
    // Only spans [s, s+2h) with s <= position < s+2h can be new squares.
    for (int s = 0; s <= position; ++s) {
        const int min_half = (position - s + 2) / 2;
        const int max_half = (m - s) / 2;
        for (int h = std::max(1, min_half); h <= max_half; ++h) {
            bool equal = true;
            for (int j = 0; j < h; ++j) {
                if (at(s + j) != at(s + h + j)) {
                    equal = false;
                    break;
                }
            }
            if (equal) return SquareOccurrence{s, h};
        }
    }
    return std::nullopt;
}

bool insertion_is_square_free(const Word& w, const ExtensionEvent& e) {
    if (contains_square(w))
        throw ContractViolation("insertion_is_square_free requires a square-free base word");
    if (e.position < 0 || e.position > w.size() || e.letter < 0 ||
        e.result != w.inserted(e.position, e.letter))
        throw InvalidInput("event is not an extension of the given word");
    return !square_in_extension(w, e.position, e.letter).has_value();
}

namespace {

// True iff w[long_start, long_start+short_len+1) equals
// w[short_start, short_start+short_len) with exactly one letter inserted.
bool one_insertion(const Word& w, int long_start, int short_start, int short_len) {
    int c = 0;
    while (c < short_len && w[long_start + c] == w[short_start + c]) ++c;
    if (c == short_len) return true; // inserted at the end
    for (int j = c; j < short_len; ++j)
        if (w[long_start + j + 1] != w[short_start + j]) return false;
    return true;
}

} // namespace

std::optional<AlmostSquareOccurrence> almost_square_at(const Word& w, int start, int length) {
    if (start < 0 || length < 0 || start + length > w.size())
        throw OutOfRange("almost-square factor outside word");
    if (length == 0 || length % 2 == 0) return std::nullopt; // almost-squares have odd length
    const int m = (length - 1) / 2;
    // left-short: W = [start, m), W' = [start+m, m+1), W' an extension of W
    const bool valid_short = one_insertion(w, start + m, start, m);
    // left-long: W = [start, m+1), W' = [start+m+1, m), W' is W minus a letter
    const bool valid_long = one_insertion(w, start, start + m + 1, m);
    if (!valid_short && !valid_long) return std::nullopt;
    AlmostSquareOccurrence occ;
    occ.start = start;
    occ.length = length;
    occ.valid_left_short = valid_short;
    occ.valid_left_long = valid_long;
    occ.split = valid_short ? SplitKind::LeftShort : SplitKind::LeftLong;
    return occ;
}

std::optional<AlmostSquareOccurrence> is_almost_square(const Word& f) {
    return almost_square_at(f, 0, f.size());
}

std::vector<AlmostSquareOccurrence> enumerate_almost_squares(const Word& q) {
    std::vector<AlmostSquareOccurrence> out;
    const int n = q.size();
    for (int start = 0; start < n; ++start)
        for (int len = 1; start + len <= n; len += 2)
            if (auto occ = almost_square_at(q, start, len)) out.push_back(*occ);
    return out;
}

std::vector<int> almost_square_lengths_at(const Word& q, int position) {
    if (position < 0 || position >= q.size())
        throw OutOfRange("position " + std::to_string(position) + " outside word of length " +
                         std::to_string(q.size()));
    std::vector<int> lengths;
    for (int len = 1; position + len <= q.size(); len += 2)
        if (almost_square_at(q, position, len)) lengths.push_back(len);
    return lengths;
}

namespace {

std::vector<int> prefix_counts(const Word& w, int k) {
    const int n = w.size();
    std::vector<int> pc(static_cast<size_t>(n + 1) * k, 0);
    for (int i = 0; i < n; ++i) {
        std::copy(pc.begin() + static_cast<long>(i) * k, pc.begin() + static_cast<long>(i + 1) * k,
                  pc.begin() + static_cast<long>(i + 1) * k);
        ++pc[static_cast<size_t>(i + 1) * k + w[i]];
    }
    return pc;
}

bool halves_abelian_equal(const std::vector<int>& pc, int k, int s, int h) {
    const int* a = pc.data() + static_cast<long>(s) * k;
    const int* b = pc.data() + static_cast<long>(s + h) * k;
    const int* c = pc.data() + static_cast<long>(s + 2 * h) * k;
    for (int x = 0; x < k; ++x)
        if (b[x] - a[x] != c[x] - b[x]) return false;
    return true;
}

} // namespace

std::optional<AbelianSquareOccurrence> find_abelian_square(const Word& w) {
    const int n = w.size();
    if (n < 2) return std::nullopt;
    const int k = w.max_letter() + 1;
    const std::vector<int> pc = prefix_counts(w, k);
    for (int s = 0; s < n; ++s) {
        const int max_half = (n - s) / 2;
        for (int h = 1; h <= max_half; ++h)
            if (halves_abelian_equal(pc, k, s, h)) return AbelianSquareOccurrence{s, h};
    }
    return std::nullopt;
}

bool is_abelian_square_free(const Word& w) { return !find_abelian_square(w).has_value(); }

std::optional<AbelianSquareOccurrence> abelian_square_in_extension(const Word& w, int position,
                                                                   Letter letter) {
    std::vector<Letter> r = w.letters();
    r.insert(r.begin() + position, letter);
    const Word ext{std::move(r)};
    const int m = ext.size();
    const int k = ext.max_letter() + 1;
    const std::vector<int> pc = prefix_counts(ext, k);
    for (int s = 0; s <= position; ++s) {
        const int min_half = (position - s + 2) / 2;
        const int max_half = (m - s) / 2;
        for (int h = std::max(1, min_half); h <= max_half; ++h)
            if (halves_abelian_equal(pc, k, s, h)) return AbelianSquareOccurrence{s, h};
    }
    return std::nullopt;
}

} // namespace exw
