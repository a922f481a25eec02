#include "exw/word.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace exw {

Alphabet::Alphabet(int size) : size_(size) {
    if (size < 1) throw InvalidInput("alphabet size must be at least 1");
}

Alphabet::Alphabet(int size, std::vector<std::string> tokens)
    : size_(size), tokens_(std::move(tokens)) {
    if (size < 1) throw InvalidInput("alphabet size must be at least 1");
    if (static_cast<int>(tokens_.size()) != size_)
        throw InvalidInput("render table must have exactly one token per letter");
    std::set<std::string> seen;
    for (const auto& t : tokens_) {
        if (t.empty()) throw InvalidInput("render token must be nonempty");
        if (!seen.insert(t).second) throw InvalidInput("render table must be injective");
    }
}

std::string Alphabet::token(Letter x) const {
    if (!contains(x)) throw OutOfRange("letter " + std::to_string(x) + " outside alphabet");
    if (!tokens_.empty()) return tokens_[static_cast<size_t>(x)];
    if (size_ <= 26) return std::string(1, static_cast<char>('a' + x));
    return std::to_string(x);
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (Letter x : letters_)
        if (x < 0) throw InvalidInput("letters must be nonnegative");
}

Word Word::factor(int start, int len) const {
    if (start < 0 || len < 0 || start + len > size())
        throw OutOfRange("factor [" + std::to_string(start) + ", +" + std::to_string(len) +
                         ") outside word of length " + std::to_string(size()));
    return Word(std::vector<Letter>(letters_.begin() + start, letters_.begin() + start + len));
}

Word Word::inserted(int position, Letter x) const {
    if (position < 0 || position > size())
        throw OutOfRange("insertion position " + std::to_string(position) +
                         " outside 0.." + std::to_string(size()));
    if (x < 0) throw InvalidInput("letters must be nonnegative");
    std::vector<Letter> out;
    out.reserve(letters_.size() + 1);
    out.insert(out.end(), letters_.begin(), letters_.begin() + position);
    out.push_back(x);
    out.insert(out.end(), letters_.begin() + position, letters_.end());
    return Word(std::move(out));
}

Word Word::erased(int position) const {
    if (position < 0 || position >= size())
        throw OutOfRange("deletion position " + std::to_string(position) +
                         " outside word of length " + std::to_string(size()));
    std::vector<Letter> out;
    out.reserve(letters_.size() - 1);
    out.insert(out.end(), letters_.begin(), letters_.begin() + position);
    out.insert(out.end(), letters_.begin() + position + 1, letters_.end());
    return Word(std::move(out));
}

Letter Word::max_letter() const {
    Letter m = -1;
    for (Letter x : letters_) m = std::max(m, x);
    return m;
}

void require_over(const Word& w, const Alphabet& a) {
    for (Letter x : w.letters())
        if (!a.contains(x))
            throw InvalidInput("letter " + std::to_string(x) + " outside alphabet of size " +
                               std::to_string(a.size()));
}

std::vector<ExtensionEvent> extensions(const Word& w, const Alphabet& a) {
    require_over(w, a);
    const int n = w.size();
    const int k = a.size();
    std::vector<ExtensionEvent> events;
    events.reserve(static_cast<size_t>(k) * (n + 1));
    for (int pos = 0; pos <= n; ++pos)
        for (Letter x = 0; x < k; ++x)
            events.push_back(ExtensionEvent{pos, x, w.inserted(pos, x)});
    return events;
}

Word delete_letter(const Word& w, int position) { return w.erased(position); }

namespace {

Word parse_letter_form(std::string_view text, int k) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c < 'a' || c > 'z')
            throw InvalidInput(std::string("unknown token '") + c + "' in word");
        Letter x = c - 'a';
        if (x >= k)
            throw InvalidInput(std::string("letter '") + c + "' outside alphabet of size " +
                               std::to_string(k));
        letters.push_back(x);
    }
    return Word(std::move(letters));
}

Word parse_token_form(std::string_view text, int k) {
    std::vector<Letter> letters;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - pos);
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
        if (tok.empty()) {
            if (comma == std::string_view::npos && letters.empty()) break; // empty word
            throw InvalidInput("empty integer token in word");
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw InvalidInput("unknown token '" + std::string(tok) + "' in word");
        if (value < 0 || value >= k)
            throw InvalidInput("letter index " + std::string(tok) + " outside alphabet of size " +
                               std::to_string(k));
        letters.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Word(std::move(letters));
}

} // namespace

Word parse_word(std::string_view text, const Alphabet& a) {
    if (a.size() <= 26) return parse_letter_form(text, a.size());
    return parse_token_form(text, a.size());
}

std::string render_word(const Word& w, const Alphabet& a) {
    require_over(w, a);
    std::string out;
    const bool single_char = a.size() <= 26 && !a.has_custom_tokens();
    for (int i = 0; i < w.size(); ++i) {
        if (!single_char && i > 0) out += ',';
        out += a.token(w[i]);
    }
    return out;
}

Word rename_letters(const Word& w, const std::vector<Letter>& sigma) {
    std::vector<Letter> out;
    out.reserve(w.letters().size());
    for (Letter x : w.letters()) {
        if (x >= static_cast<int>(sigma.size()))
            throw InvalidInput("renaming map too small for letter " + std::to_string(x));
        out.push_back(sigma[static_cast<size_t>(x)]);
    }
    return Word(std::move(out));
}

Word canonical_form(const Word& w) {
    std::vector<Letter> map(static_cast<size_t>(w.max_letter() + 1), -1);
    Letter next = 0;
    std::vector<Letter> out;
    out.reserve(w.letters().size());
    for (Letter x : w.letters()) {
        if (map[static_cast<size_t>(x)] < 0) map[static_cast<size_t>(x)] = next++;
        out.push_back(map[static_cast<size_t>(x)]);
    }
    return Word(std::move(out));
}

} // namespace exw
