#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "exw/word.hpp"

namespace exw {

// Word-list file: UTF-8, one rendered word per line, '#' lines are comments.
// A '#k=<int>' header fixes the alphabet size for the lines that follow;
// it is required for the integer-token form (alphabets beyond 26 letters).
struct WordList {
    std::optional<int> alphabet_size; // from a '#k=<int>' header, if any
    std::vector<Word> words;
};

// `k_hint` supplies the alphabet size when the file has no header
// (default 26, the full lowercase range). Blank lines are skipped.
WordList read_word_list(std::istream& in, std::optional<int> k_hint = std::nullopt);
WordList read_word_list_file(const std::string& path, std::optional<int> k_hint = std::nullopt);

// Emits a '#k=<int>' header first whenever the alphabet needs integer tokens.
void write_word_list(std::ostream& out, const std::vector<Word>& words, const Alphabet& a);

} // namespace exw
