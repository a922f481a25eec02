#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "exw/pattern.hpp"
#include "exw/repetition.hpp"
#include "exw/word.hpp"

namespace exw {

using BigInt = boost::multiprecision::cpp_int;

// Evidence that a word is extremal: it avoids the property-defining object
// and each of the k(n+1) extension events carries a containment witness.
struct PatternCertificate {
    Word word;
    std::vector<std::pair<ExtensionEvent, PatternWitness>> witnesses;
};

struct SquareFreeCertificate {
    Word word;
    std::vector<std::pair<ExtensionEvent, SquareOccurrence>> witnesses;
};

struct AbelianCertificate {
    Word word;
    std::vector<std::pair<ExtensionEvent, AbelianSquareOccurrence>> witnesses;
};

// w avoids p and every extension of w over a contains p.
std::optional<PatternCertificate> is_extremal(const Word& w, const Pattern& p, const Alphabet& a);

// w is square-free and every extension has a square; uses the covering-span
// fast path per extension.
std::optional<SquareFreeCertificate> is_extremal_square_free(const Word& w, const Alphabet& a);

std::optional<AbelianCertificate> is_extremal_abelian_square_free(const Word& w,
                                                                  const Alphabet& a);

// Exact number of extremal X Y_1 X ... X Y_t X-avoiding words over k
// letters: permutations of the multiset {1^t, ..., k^t}, i.e. (tk)!/(t!)^k.
BigInt count_extremal_family(int k, int t);

// The words themselves, one per multiset permutation in lexicographic
// order: each symbol i in the permutation contributes a doubled letter, so
// a run of j consecutive i's becomes 2j consecutive copies of letter i.
// Every emitted word has length 2tk. Throws ResourceLimit when the count
// exceeds `budget`.
std::vector<Word> generate_extremal_family(int k, int t, std::uint64_t budget = 10'000'000);

struct BruteForceResult {
    std::vector<Word> words; // lexicographic
    bool complete = true;
    std::uint64_t nodes = 0;
};

// Independent oracle: prefix-pruned depth-first enumeration of all
// p-avoiding words of length <= max_len, keeping those that are extremal.
// Stops (complete = false) once `budget` tree nodes have been visited.
BruteForceResult enumerate_extremal_bruteforce(const Pattern& p, const Alphabet& a, int max_len,
                                               std::uint64_t budget = 50'000'000);

enum class ExtremalPredicate { SquareFree, AbelianSquareFree };

std::string predicate_name(ExtremalPredicate pred);

struct SearchOptions {
    std::uint64_t budget = 200'000'000; // node cap, checked between lengths
    int parallelism = 1;
    int split_depth = 5; // subtree tasks are rooted at prefixes of this length
};

struct LengthCount {
    int length = 0;
    std::uint64_t examined = 0;
};

struct SearchReport {
    int alphabet_size = 0;
    std::string predicate;
    int max_len = 0;
    std::vector<LengthCount> examined;   // per explored length
    std::optional<int> minimal_length;
    std::vector<Word> witnesses;         // canonical forms, sorted, unique
    bool complete = true;                // false when the node budget ran out
    int complete_through = 0;            // every length <= this was fully explored
    std::uint64_t nodes = 0;
    double wall_ms = 0.0;
};

// Shortest extremal word search. Lengths are explored one at a time via
// prefix-pruned DFS over predicate-satisfying words (both predicates are
// factor-closed); the search stops at the first length with witnesses.
// Work splits into prefix-rooted subtree tasks; merged output is identical
// for every parallelism degree.
SearchReport search_shortest_extremal(ExtremalPredicate pred, const Alphabet& a, int max_len,
                                      const SearchOptions& opts = {});

// Visits every predicate-satisfying word that extends `prefix` (including
// the prefix itself when it qualifies) up to max_len, letters ascending.
// The callback returns false to stop early.
void visit_predicate_words(ExtremalPredicate pred, const Alphabet& a, const Word& prefix,
                           int max_len, const std::function<bool(const Word&)>& visit);

} // namespace exw
