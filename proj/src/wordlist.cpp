#include "exw/wordlist.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace exw {

WordList read_word_list(std::istream& in, std::optional<int> k_hint) {
    WordList list;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (line.rfind("#k=", 0) == 0) {
                int k = 0;
                const char* first = line.data() + 3;
                const char* last = line.data() + line.size();
                auto [ptr, ec] = std::from_chars(first, last, k);
                if (ec != std::errc{} || ptr != last || k < 1)
                    throw InvalidInput("bad alphabet header at line " + std::to_string(line_no) +
                                       ": " + line);
                list.alphabet_size = k;
            }
            continue; // other '#' lines are comments
        }
        const int k = list.alphabet_size.value_or(k_hint.value_or(26));
        try {
            list.words.push_back(parse_word(line, Alphabet(k)));
        } catch (const Error& e) {
            throw InvalidInput("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return list;
}

WordList read_word_list_file(const std::string& path, std::optional<int> k_hint) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open word list: " + path);
    return read_word_list(in, k_hint);
}

void write_word_list(std::ostream& out, const std::vector<Word>& words, const Alphabet& a) {
    if (a.size() > 26) out << "#k=" << a.size() << '\n';
    for (const Word& w : words) out << render_word(w, a) << '\n';
}

} // namespace exw
