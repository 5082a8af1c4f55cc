#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "adq/code.hpp"
#include "adq/geometry.hpp"
#include "adq/search.hpp"

namespace adq {

// Code file formats.
//   binary: header "n r", then r rows of 2n characters over {0,1}
//   f4:     header "n k f4", then k rows of n symbols over {0,1,w,W}
// Both round-trip bit-exactly through parse + emit.
enum class CodeFormat { Binary, F4 };

struct CodeDocument {
    CodeFormat format;
    AdditiveCode code;
    // Present exactly when format == F4.
    std::optional<std::vector<F4Vector>> f4_rows;
};

CodeDocument parse_code(std::istream& in);
CodeDocument parse_code_string(const std::string& text);

std::string emit_code_binary(const AdditiveCode& c);
std::string emit_code_f4(const std::vector<F4Vector>& rows);

// F4 symbol rows recovering the code: the paired-row layout produced by
// AdditiveCode::from_f4 when present, otherwise a canonical echelon basis if
// the code is literally F4-linear. nullopt when the code is not F4-linear.
std::optional<std::vector<F4Vector>> try_f4_rows(const AdditiveCode& c);

// Family format: header "m count", then per object "rank g1 [g2]" with
// generators as bit strings of length m.
ObjectFamily parse_family(std::istream& in);
ObjectFamily parse_family_string(const std::string& text);
std::string emit_family(const ObjectFamily& f);

// Search problem files. First line selects the kind:
//   completion <target> <strength>   followed by a family block, then
//                                    optionally "pool" and a family block
//   coverage <ambient> <total>       followed by "fixed <count>" with that
//                                    many "g1 g2" line rows, then
//                                    "mult <point> <count>" / "forbid <point>"
//   f4complete <total_rows> <min_distance>  followed by the fixed P rows
struct ProblemDocument {
    std::optional<CompletionProblem> completion;
    std::optional<CoverageProblem> coverage;
    std::optional<F4CompletionProblem> f4;
};

ProblemDocument parse_problem(std::istream& in);
ProblemDocument parse_problem_string(const std::string& text);

std::string emit_problem(const CompletionProblem& p);
std::string emit_problem(const CoverageProblem& p);
std::string emit_problem(const F4CompletionProblem& p);

}  // namespace adq
