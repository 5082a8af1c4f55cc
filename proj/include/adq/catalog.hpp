#pragma once

#include <functional>
#include <string>
#include <vector>

#include "adq/code.hpp"
#include "adq/geometry.hpp"
#include "adq/gf4.hpp"
#include "adq/search.hpp"

namespace adq::catalog {

// Every builder re-verifies its expected parameters and throws
// std::logic_error on any mismatch.

// The [6,3,4] hexacode.
std::vector<F4Vector> hexacode_rows();
AdditiveCode hexacode();

// The unique linear [12,6,6] code, systematic (I | P).
std::vector<F4Vector> linear_12_6_6_rows();
AdditiveCode linear_12_6_6();

// Partial P prefixes feeding the systematic completion searches: the 3-row
// prefix completes in exactly 12 ways, the 4-row prefix in none.
F4CompletionProblem p3_completion();
F4CompletionProblem p4_completion();

// The five 2-generator [7,1] codes of distance >= 6 whose duals seed the
// strength-5 completion searches.
std::vector<AdditiveCode> configurations();

// Completion of a configuration's dual line family to 12 lines of strength 5
// in V_12.
CompletionProblem configuration_completion(std::size_t index_1_based);

// The elliptic quadric of PG(3,4): the unique 17-cap.
std::vector<F4Vector> elliptic_quadric_points();
std::vector<F4Vector> quadric_matrix_rows();  // 4 x 17, points as columns
AdditiveCode quadric_code_17_4_12();
AdditiveCode quadric_dual_17_13_4();

// The exact-multiplicity coverage instance in PG(4,2) with 246 solutions.
CoverageProblem quadric_coverage_problem();

// Extending the 17 quadric code lines by an 18th line of strength 3 in V_8
// (no solutions).
CompletionProblem quadric_extension_problem();

// The 22-line family in V_9 and its [22,4.5] code of strength 3.
ObjectFamily code_22_4_5_family();
AdditiveCode code_22_4_5();

struct Entry {
    std::string name;
    std::string kind;  // "code", "f4 code", "family", "problem"
    std::string description;
    std::function<std::string()> emit;
};

const std::vector<Entry>& entries();
const Entry* find_entry(const std::string& name);

}  // namespace adq::catalog
