#pragma once

#include <optional>
#include <string>
#include <variant>

#include "permcode/channel.hpp"
#include "permcode/code_a.hpp"
#include "permcode/code_b.hpp"
#include "permcode/code_c.hpp"
#include "permcode/oracle.hpp"

namespace permcode {

using CodeParams = std::variant<CodeParamsA, CodeParamsB, CodeParamsC>;

// Stream descriptor: a one-line JSON object carrying the model letter and all
// code parameters, so downstream commands need no out-of-band state.
std::string descriptor_to_json(const CodeParams& params);
// Rebuilds parameters from a descriptor line. Derived fields are recomputed,
// never trusted. Throws malformed_error on shape problems and param_error on
// invalid parameter combinations.
CodeParams descriptor_from_json(const std::string& line);

std::string pattern_to_json(const ErrorPattern& pattern);
ErrorPattern pattern_from_json(const std::string& json_text);

// Record lines: {"perm":[...]} for permutations, {"word":[...],"pattern":…}
// for corrupted words, {"error":…,"detail":…} for failed lines.
std::string perm_record(const Word& w);
std::string word_record(const Word& w, const ErrorPattern& pattern);
std::string error_record(const std::string& kind, const std::string& detail);

// One parsed input line of a JSON-lines stream.
struct ParsedRecord {
  std::optional<CodeParams> descriptor;
  std::optional<Word> word;  // from "perm" or "word"
  bool is_error = false;     // an {"error":…} object passing through
};

// Classifies and parses a line. Throws malformed_error when the line is not
// a JSON object of a recognized shape.
ParsedRecord parse_record(const std::string& line);

// Serialized verification report. Timing is deliberately left out so report
// lines are byte-identical across runs with the same seed.
std::string report_to_json(const VerificationReport& report);

}  // namespace permcode
