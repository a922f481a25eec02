#include "exw/extremal.hpp"

#include <algorithm>
#include <chrono>

#include "exw/parallel.hpp"

namespace exw {

std::optional<PatternCertificate> is_extremal(const Word& w, const Pattern& p, const Alphabet& a) {
    require_over(w, a);
    if (contains(w, p)) return std::nullopt; // must avoid p itself
    PatternCertificate cert;
    cert.word = w;
    cert.witnesses.reserve(static_cast<size_t>(a.size()) * (w.size() + 1));
    for (ExtensionEvent& e : extensions(w, a)) {
        auto witness = contains(e.result, p);
        if (!witness) return std::nullopt; // found an avoiding extension
        cert.witnesses.emplace_back(std::move(e), std::move(*witness));
    }
    return cert;
}

std::optional<SquareFreeCertificate> is_extremal_square_free(const Word& w, const Alphabet& a) {
    require_over(w, a);
    if (contains_square(w)) return std::nullopt;
    SquareFreeCertificate cert;
    cert.word = w;
    cert.witnesses.reserve(static_cast<size_t>(a.size()) * (w.size() + 1));
    for (int pos = 0; pos <= w.size(); ++pos) {
        for (Letter x = 0; x < a.size(); ++x) {
            auto sq = square_in_extension(w, pos, x);
            if (!sq) return std::nullopt;
            cert.witnesses.emplace_back(ExtensionEvent{pos, x, w.inserted(pos, x)}, *sq);
        }
    }
    return cert;
}

std::optional<AbelianCertificate> is_extremal_abelian_square_free(const Word& w,
                                                                  const Alphabet& a) {
    require_over(w, a);
    if (find_abelian_square(w)) return std::nullopt;
    AbelianCertificate cert;
    cert.word = w;
    cert.witnesses.reserve(static_cast<size_t>(a.size()) * (w.size() + 1));
    for (int pos = 0; pos <= w.size(); ++pos) {
        for (Letter x = 0; x < a.size(); ++x) {
            auto sq = abelian_square_in_extension(w, pos, x);
            if (!sq) return std::nullopt;
            cert.witnesses.emplace_back(ExtensionEvent{pos, x, w.inserted(pos, x)}, *sq);
        }
    }
    return cert;
}

namespace {

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

BigInt count_extremal_family(int k, int t) {
    if (k < 1 || t < 1) throw InvalidInput("k and t must be at least 1");
    BigInt denom = 1;
    const BigInt tf = factorial(t);
    for (int i = 0; i < k; ++i) denom *= tf;
    return factorial(t * k) / denom;
}

std::vector<Word> generate_extremal_family(int k, int t, std::uint64_t budget) {
    const BigInt count = count_extremal_family(k, t);
    if (count > budget)
        throw ResourceLimit("family (k=" + std::to_string(k) + ", t=" + std::to_string(t) +
                            ") has " + count.str() + " words, budget is " +
                            std::to_string(budget));
    std::vector<Letter> perm;
    perm.reserve(static_cast<size_t>(t) * k);
    for (Letter x = 0; x < k; ++x)
        for (int i = 0; i < t; ++i) perm.push_back(x);
    std::vector<Word> words;
    do {
        std::vector<Letter> letters;
        letters.reserve(perm.size() * 2);
        for (Letter x : perm) {
            letters.push_back(x);
            letters.push_back(x);
        }
        words.emplace_back(std::move(letters));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return words;
}

namespace {

struct BruteForceState {
    const Pattern& pattern;
    const Alphabet& alphabet;
    int max_len;
    std::uint64_t budget;
    BruteForceResult result;
    std::vector<Letter> cur;

    // preorder over the tree of pattern-avoiding words
    bool dfs() {
        if (result.nodes >= budget) {
            result.complete = false;
            return false;
        }
        ++result.nodes;
        Word w{std::vector<Letter>(cur)};
        if (is_extremal(w, pattern, alphabet)) result.words.push_back(w);
        if (static_cast<int>(cur.size()) >= max_len) return true;
        for (Letter x = 0; x < alphabet.size(); ++x) {
            cur.push_back(x);
            // a new realizing factor would have to end at the new letter
            const bool avoids =
                !contains_factor_ending_at(Word{std::vector<Letter>(cur)}, pattern,
                                           static_cast<int>(cur.size()));
            bool keep_going = true;
            if (avoids) keep_going = dfs();
            cur.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }
};

} // namespace

BruteForceResult enumerate_extremal_bruteforce(const Pattern& p, const Alphabet& a, int max_len,
                                               std::uint64_t budget) {
    if (max_len < 0) throw InvalidInput("max_len must be nonnegative");
    BruteForceState state{p, a, max_len, budget, {}, {}};
    state.dfs();
    return std::move(state.result);
}

std::string predicate_name(ExtremalPredicate pred) {
    return pred == ExtremalPredicate::SquareFree ? "square-free" : "abelian-square-free";
}

namespace {

// DFS state for one predicate-satisfying subtree. The path and, for the
// abelian predicate, its prefix letter-count rows are maintained
// incrementally along the path.
class PredicateDfs {
public:
    PredicateDfs(ExtremalPredicate pred, int k) : pred_(pred), k_(k) {
        counts_.assign(static_cast<size_t>(k_), 0); // row 0 = all zeros
    }

    const std::vector<Letter>& word() const { return cur_; }
    int length() const { return static_cast<int>(cur_.size()); }

    // Extends the path iff the result still satisfies the predicate.
    bool try_push(Letter x) {
        cur_.push_back(x);
        if (pred_ == ExtremalPredicate::SquareFree ? suffix_square() : suffix_abelian_square()) {
            cur_.pop_back();
            return false;
        }
        if (pred_ == ExtremalPredicate::AbelianSquareFree) push_count_row(x);
        return true;
    }

    void pop() {
        cur_.pop_back();
        if (pred_ == ExtremalPredicate::AbelianSquareFree)
            counts_.resize(counts_.size() - static_cast<size_t>(k_));
    }

    // Seeds the path from a known predicate-satisfying prefix.
    void seed(const std::vector<Letter>& prefix) {
        cur_ = prefix;
        if (pred_ == ExtremalPredicate::AbelianSquareFree) {
            counts_.assign(static_cast<size_t>(k_), 0);
            std::vector<Letter> saved = std::move(cur_);
            cur_.clear();
            for (Letter x : saved) {
                cur_.push_back(x);
                push_count_row(x);
            }
        }
    }

    bool extremal_current() const {
        return pred_ == ExtremalPredicate::SquareFree ? extremal_square_free()
                                                      : extremal_abelian();
    }

private:
    void push_count_row(Letter x) {
        const size_t row = counts_.size() - static_cast<size_t>(k_);
        counts_.insert(counts_.end(), counts_.begin() + static_cast<long>(row),
                       counts_.begin() + static_cast<long>(row) + k_);
        ++counts_[counts_.size() - static_cast<size_t>(k_) + static_cast<size_t>(x)];
    }

    // any new square must end at the freshly appended letter
    bool suffix_square() const {
        const int n = static_cast<int>(cur_.size());
        for (int h = 1; 2 * h <= n; ++h) {
            bool equal = true;
            for (int j = 0; j < h; ++j) {
                if (cur_[static_cast<size_t>(n - 2 * h + j)] !=
                    cur_[static_cast<size_t>(n - h + j)]) {
                    equal = false;
                    break;
                }
            }
            if (equal) return true;
        }
        return false;
    }

    bool suffix_abelian_square() const {
        const int n = static_cast<int>(cur_.size());
        const int* last = counts_.data() + counts_.size() - k_; // row n-1, before push
        for (int h = 1; 2 * h <= n; ++h) {
            const int* mid = row(n - h);
            const int* lo = row(n - 2 * h);
            bool equal = true;
            for (int c = 0; c < k_; ++c) {
                const int right = (c == cur_.back() ? 1 : 0) + last[c] - mid[c];
                if (right != mid[c] - lo[c]) {
                    equal = false;
                    break;
                }
            }
            if (equal) return true;
        }
        return false;
    }

    const int* row(int i) const { return counts_.data() + static_cast<size_t>(i) * k_; }

    bool extremal_square_free() const {
        const int n = static_cast<int>(cur_.size());
        for (int pos = 0; pos <= n; ++pos)
            for (Letter x = 0; x < k_; ++x)
                if (!covering_square(pos, x)) return false;
        return true;
    }

    bool covering_square(int pos, Letter x) const {
        const int m = static_cast<int>(cur_.size()) + 1;
        auto at = [&](int i) -> Letter {
            if (i < pos) return cur_[static_cast<size_t>(i)];
            if (i == pos) return x;
            return cur_[static_cast<size_t>(i - 1)];
        };
        for (int s = 0; s <= pos; ++s) {
            const int min_half = std::max(1, (pos - s + 2) / 2);
            const int max_half = (m - s) / 2;
            for (int h = min_half; h <= max_half; ++h) {
                bool equal = true;
                for (int j = 0; j < h; ++j) {
                    if (at(s + j) != at(s + h + j)) {
                        equal = false;
                        break;
                    }
                }
                if (equal) return true;
            }
        }
        return false;
    }

    bool extremal_abelian() const {
        const int n = static_cast<int>(cur_.size());
        std::vector<int> diff(static_cast<size_t>(k_), 0);
        for (int pos = 0; pos <= n; ++pos)
            for (Letter x = 0; x < k_; ++x)
                if (!covering_abelian_square(pos, x, diff)) return false;
        return true;
    }

    // Walks candidate halves with an O(1) multiset-difference update per
    // step; `diff` is caller-provided scratch of size k.
    bool covering_abelian_square(int pos, Letter x, std::vector<int>& diff) const {
        const int m = static_cast<int>(cur_.size()) + 1;
        auto at = [&](int i) -> Letter {
            if (i < pos) return cur_[static_cast<size_t>(i)];
            if (i == pos) return x;
            return cur_[static_cast<size_t>(i - 1)];
        };
        for (int s = 0; s <= pos; ++s) {
            std::fill(diff.begin(), diff.end(), 0);
            int nonzero = 0;
            auto bump = [&](Letter c, int delta) {
                const int before = diff[static_cast<size_t>(c)];
                const int after = before + delta;
                diff[static_cast<size_t>(c)] = after;
                if (before == 0 && after != 0) ++nonzero;
                if (before != 0 && after == 0) --nonzero;
            };
            const int max_half = (m - s) / 2;
            for (int h = 1; h <= max_half; ++h) {
                // halves [s, s+h) and [s+h, s+2h); step h-1 -> h moves
                // at(s+h-1) from the right half to the left half and
                // appends at(s+2h-2), at(s+2h-1) to the right half.
                bump(at(s + h - 1), +2);
                bump(at(s + 2 * h - 2), -1);
                bump(at(s + 2 * h - 1), -1);
                if (nonzero == 0 && s + 2 * h > pos) return true;
            }
        }
        return false;
    }

    ExtremalPredicate pred_;
    int k_;
    std::vector<Letter> cur_;
    std::vector<int> counts_; // (length+1) x k prefix letter counts
};

struct PassTaskResult {
    std::uint64_t nodes = 0;
    std::uint64_t examined = 0;
    std::vector<Word> witnesses;
};

void pass_dfs(PredicateDfs& dfs, int target, int k, PassTaskResult& out) {
    ++out.nodes;
    if (dfs.length() == target) {
        ++out.examined;
        if (dfs.extremal_current()) out.witnesses.push_back(canonical_form(Word{dfs.word()}));
        return;
    }
    for (Letter x = 0; x < k; ++x) {
        if (!dfs.try_push(x)) continue;
        pass_dfs(dfs, target, k, out);
        dfs.pop();
    }
}

// All predicate-satisfying words of length exactly `depth`; interior nodes
// (lengths < depth, including the empty word) are tallied into `nodes`.
std::vector<std::vector<Letter>> collect_prefixes(ExtremalPredicate pred, int k, int depth,
                                                  std::uint64_t& nodes) {
    std::vector<std::vector<Letter>> prefixes;
    PredicateDfs dfs(pred, k);
    auto rec = [&](auto&& self) -> void {
        if (dfs.length() == depth) {
            prefixes.push_back(dfs.word());
            return;
        }
        ++nodes;
        for (Letter x = 0; x < k; ++x) {
            if (!dfs.try_push(x)) continue;
            self(self);
            dfs.pop();
        }
    };
    rec(rec);
    return prefixes;
}

} // namespace

SearchReport search_shortest_extremal(ExtremalPredicate pred, const Alphabet& a, int max_len,
                                      const SearchOptions& opts) {
    if (max_len < 0) throw InvalidInput("max_len must be nonnegative");
    if (opts.budget == 0) throw InvalidInput("budget must be positive");
    const auto t0 = std::chrono::steady_clock::now();
    const int k = a.size();

    SearchReport report;
    report.alphabet_size = k;
    report.predicate = predicate_name(pred);
    report.max_len = max_len;

    for (int target = 1; target <= max_len; ++target) {
        if (report.nodes >= opts.budget) {
            report.complete = false;
            break;
        }
        const int depth = std::min(opts.split_depth, target);
        std::uint64_t pass_nodes = 0;
        const auto prefixes = collect_prefixes(pred, k, depth, pass_nodes);

        std::vector<std::function<PassTaskResult()>> tasks;
        tasks.reserve(prefixes.size());
        for (const auto& prefix : prefixes) {
            tasks.push_back([&prefix, pred, k, target] {
                PredicateDfs dfs(pred, k);
                dfs.seed(prefix);
                PassTaskResult out;
                pass_dfs(dfs, target, k, out);
                return out;
            });
        }
        const auto results = run_indexed_tasks<PassTaskResult>(opts.parallelism, tasks);

        std::uint64_t pass_examined = 0;
        std::vector<Word> pass_witnesses;
        for (const auto& r : results) {
            pass_nodes += r.nodes;
            pass_examined += r.examined;
            pass_witnesses.insert(pass_witnesses.end(), r.witnesses.begin(), r.witnesses.end());
        }
        report.nodes += pass_nodes;
        report.examined.push_back(LengthCount{target, pass_examined});
        report.complete_through = target;
        if (!pass_witnesses.empty()) {
            std::sort(pass_witnesses.begin(), pass_witnesses.end());
            pass_witnesses.erase(std::unique(pass_witnesses.begin(), pass_witnesses.end()),
                                 pass_witnesses.end());
            report.witnesses = std::move(pass_witnesses);
            report.minimal_length = target;
            break; // shortest found; longer lengths are irrelevant
        }
    }

    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return report;
}

void visit_predicate_words(ExtremalPredicate pred, const Alphabet& a, const Word& prefix,
                           int max_len, const std::function<bool(const Word&)>& visit) {
    require_over(prefix, a);
    if (prefix.size() > max_len) return;
    const bool prefix_ok = pred == ExtremalPredicate::SquareFree
                               ? is_square_free(prefix)
                               : is_abelian_square_free(prefix);
    if (!prefix_ok) return;
    PredicateDfs dfs(pred, a.size());
    dfs.seed(prefix.letters());
    bool stop = false;
    auto rec = [&](auto&& self) -> void {
        if (stop) return;
        if (!visit(Word{dfs.word()})) {
            stop = true;
            return;
        }
        if (dfs.length() >= max_len) return;
        for (Letter x = 0; x < a.size() && !stop; ++x) {
            if (!dfs.try_push(x)) continue;
            self(self);
            dfs.pop();
        }
    };
    rec(rec);
}

} // namespace exw
