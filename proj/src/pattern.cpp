#include "exw/pattern.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace exw {

Pattern::Pattern(std::vector<int> raw) {
    if (raw.empty()) throw InvalidInput("pattern must be nonempty");
    std::map<int, int> renumber;
    vars.reserve(raw.size());
    for (int v : raw) {
        auto [it, fresh] = renumber.emplace(v, static_cast<int>(renumber.size()));
        vars.push_back(it->second);
        (void)fresh;
    }
}

int Pattern::num_vars() const {
    int v = 0;
    for (int x : vars) v = std::max(v, x + 1);
    return v;
}

namespace {

bool valid_token(std::string_view tok) {
    if (tok.empty() || tok.front() < 'A' || tok.front() > 'Z') return false;
    for (char c : tok)
        if (!((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'))) return false;
    return true;
}

constexpr char kVarLetters[] = "XYZWVU";

} // namespace

Pattern Pattern::parse(std::string_view text) {
    std::vector<std::string> tokens;
    if (text.find('.') != std::string_view::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t dot = text.find('.', pos);
            size_t len = dot == std::string_view::npos ? std::string_view::npos : dot - pos;
            tokens.emplace_back(text.substr(pos, len));
            if (dot == std::string_view::npos) break;
            pos = dot + 1;
        }
    } else {
        for (char c : text) tokens.emplace_back(1, c);
    }
    if (tokens.empty()) throw InvalidInput("pattern must be nonempty");
    std::map<std::string, int> ids;
    std::vector<int> raw;
    raw.reserve(tokens.size());
    for (const auto& tok : tokens) {
        if (!valid_token(tok)) throw InvalidInput("bad pattern token '" + tok + "'");
        auto [it, fresh] = ids.emplace(tok, static_cast<int>(ids.size()));
        raw.push_back(it->second);
        (void)fresh;
    }
    return Pattern(std::move(raw));
}

std::string Pattern::render() const {
    const int v = num_vars();
    std::string out;
    if (v <= static_cast<int>(sizeof(kVarLetters)) - 1) {
        for (int x : vars) out += kVarLetters[x];
    } else {
        for (size_t i = 0; i < vars.size(); ++i) {
            if (i > 0) out += '.';
            out += 'X' + std::to_string(vars[i] + 1);
        }
    }
    return out;
}

Pattern zimin(int n) {
    if (n < 1) throw InvalidInput("zimin index must be at least 1");
    if (n > 24) throw ResourceLimit("zimin index " + std::to_string(n) + " exceeds cap 24");
    std::vector<int> z{0};
    for (int i = 2; i <= n; ++i) {
        std::vector<int> next = z;
        next.push_back(i - 1);
        next.insert(next.end(), z.begin(), z.end());
        z = std::move(next);
    }
    return Pattern(std::move(z));
}

Word zimin_word(int n) { return Word(zimin(n).vars); }

Pattern family_pattern(int t) {
    if (t < 1) throw InvalidInput("family parameter t must be at least 1");
    std::vector<int> raw{0};
    for (int i = 1; i <= t; ++i) {
        raw.push_back(i);
        raw.push_back(0);
    }
    return Pattern(std::move(raw));
}

namespace {

struct PieceRef {
    int start = -1;
    int len = 0; // 0 = unassigned; pieces are always nonempty
};

// Backtracking matcher over factors of one word. Failed states at fresh-
// variable choice points are memoized across factors within one query,
// keyed by (pos, end, pattern index, contents assigned to the variables
// still occurring in the pattern suffix).
class Matcher {
public:
    Matcher(const Word& w, const Pattern& p)
        : w_(w), p_(p), assign_(static_cast<size_t>(p.num_vars())) {
        const int r = p_.length();
        suffix_vars_.resize(static_cast<size_t>(r));
        std::set<int> seen;
        for (int pi = r - 1; pi >= 0; --pi) {
            seen.insert(p_.vars[static_cast<size_t>(pi)]);
            suffix_vars_[static_cast<size_t>(pi)] = std::vector<int>(seen.begin(), seen.end());
        }
    }

    std::optional<Realization> run(int start, int end) {
        if (!match(start, 0, end)) return std::nullopt;
        Realization r;
        r.boundaries.reserve(static_cast<size_t>(p_.length()) + 1);
        r.boundaries.push_back(0);
        int cut = 0;
        for (int v : p_.vars) {
            cut += assign_[static_cast<size_t>(v)].len;
            r.boundaries.push_back(cut);
        }
        r.assignment.reserve(assign_.size());
        for (const PieceRef& pr : assign_)
            r.assignment.push_back(w_.factor(pr.start, pr.len));
        for (PieceRef& pr : assign_) pr = PieceRef{}; // reset for the next factor
        return r;
    }

private:
    bool pieces_equal(int a, int b, int len) const {
        for (int j = 0; j < len; ++j)
            if (w_[a + j] != w_[b + j]) return false;
        return true;
    }

    std::string state_key(int pos, int pi, int end) const {
        std::string key;
        key.reserve(16 + suffix_vars_[static_cast<size_t>(pi)].size() * 8);
        auto put = [&key](int value) {
            for (int b = 0; b < 4; ++b) key += static_cast<char>((value >> (8 * b)) & 0xff);
        };
        put(pos);
        put(end);
        put(pi);
        for (int v : suffix_vars_[static_cast<size_t>(pi)]) {
            const PieceRef& pr = assign_[static_cast<size_t>(v)];
            put(pr.len);
            for (int j = 0; j < pr.len; ++j) put(w_[pr.start + j]);
        }
        return key;
    }

    bool match(int pos, int pi, int end) {
        if (pi == p_.length()) return pos == end;
        const int rest = p_.length() - pi - 1;
        const int v = p_.vars[static_cast<size_t>(pi)];
        PieceRef& pr = assign_[static_cast<size_t>(v)];
        if (pr.len > 0) {
            if (pos + pr.len + rest > end) return false;
            if (!pieces_equal(pos, pr.start, pr.len)) return false;
            return match(pos + pr.len, pi + 1, end);
        }
        const int max_len = end - pos - rest;
        if (max_len < 1) return false;
        std::string key = state_key(pos, pi, end);
        if (failed_.contains(key)) return false;
        for (int len = 1; len <= max_len; ++len) {
            pr = PieceRef{pos, len};
            if (match(pos + len, pi + 1, end)) return true;
        }
        pr = PieceRef{};
        failed_.insert(std::move(key));
        return false;
    }

    const Word& w_;
    const Pattern& p_;
    std::vector<PieceRef> assign_;
    std::vector<std::vector<int>> suffix_vars_;
    std::unordered_set<std::string> failed_;
};

} // namespace

std::optional<Realization> realizes(const Word& w, const Pattern& p) {
    Matcher m(w, p);
    return m.run(0, w.size());
}

std::optional<PatternWitness> contains(const Word& w, const Pattern& p) {
    const int n = w.size();
    const int r = p.length();
    Matcher m(w, p);
    for (int start = 0; start + r <= n; ++start) {
        for (int len = r; start + len <= n; ++len) {
            if (auto real = m.run(start, start + len))
                return PatternWitness{start, len, std::move(*real)};
        }
    }
    return std::nullopt;
}

bool contains_factor_ending_at(const Word& w, const Pattern& p, int end) {
    const int r = p.length();
    if (end < r || end > w.size()) return false;
    Matcher m(w, p);
    for (int start = end - r; start >= 0; --start)
        if (m.run(start, end)) return true;
    return false;
}

bool is_unavoidable(const Pattern& p, const PatternLimits& limits) {
    if (p.length() > limits.max_pattern_length)
        throw ResourceLimit("pattern length " + std::to_string(p.length()) + " exceeds cap " +
                            std::to_string(limits.max_pattern_length));
    if (p.num_vars() > limits.max_variables)
        throw ResourceLimit("pattern has " + std::to_string(p.num_vars()) +
                            " variables, cap is " + std::to_string(limits.max_variables));
    return contains(zimin_word(p.num_vars()), p).has_value();
}

bool realization_valid(const Word& factor, const Pattern& p, const Realization& r) {
    const size_t n_cuts = r.boundaries.size();
    if (n_cuts != static_cast<size_t>(p.length()) + 1) return false;
    if (static_cast<int>(r.assignment.size()) != p.num_vars()) return false;
    if (r.boundaries.front() != 0 || r.boundaries.back() != factor.size()) return false;
    for (size_t i = 0; i + 1 < n_cuts; ++i)
        if (r.boundaries[i] >= r.boundaries[i + 1]) return false; // pieces nonempty
    for (const Word& piece : r.assignment)
        if (piece.empty()) return false;
    for (int i = 0; i < p.length(); ++i) {
        const int b = r.boundaries[static_cast<size_t>(i)];
        const int e = r.boundaries[static_cast<size_t>(i) + 1];
        if (factor.factor(b, e - b) != r.assignment[static_cast<size_t>(p.vars[static_cast<size_t>(i)])])
            return false;
    }
    return true;
}

} // namespace exw
