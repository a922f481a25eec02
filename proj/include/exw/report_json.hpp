#pragma once

#include <nlohmann/json.hpp>

#include "exw/bounds.hpp"
#include "exw/extremal.hpp"
#include "exw/pattern.hpp"
#include "exw/repetition.hpp"
#include "exw/word.hpp"

namespace exw {

using json = nlohmann::json;

// Report envelope shared by every CLI command: {command, config, result,
// counts, witnesses, violations, elapsed_ms}. Key order is fixed by the
// JSON library's sorted objects, so identical runs give identical bytes
// once elapsed_ms is stripped.
json make_envelope(const std::string& command, json config, json result, json counts,
                   json witnesses, json violations, double elapsed_ms);

// elapsed_ms is the only nondeterministic field; tests remove it before
// comparing runs byte for byte.
json strip_elapsed(json envelope);

json to_json(const SquareOccurrence& occ);
json to_json(const AbelianSquareOccurrence& occ);
json to_json(const AlmostSquareOccurrence& occ);
json to_json(const PatternWitness& witness, const Alphabet& a);
json to_json(const SearchReport& report, const Alphabet& a);
json to_json(const VerificationReport& report);

std::string split_name(SplitKind split);

} // namespace exw
