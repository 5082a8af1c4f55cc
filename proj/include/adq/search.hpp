#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "adq/geometry.hpp"
#include "adq/gf4.hpp"

namespace adq {

enum class SearchMode { Exists, Count, Collect };

// Callback for progress checkpoints in long searches.
using ProgressFn = std::function<void(const std::string&)>;

// Extend a line family to target_count objects under a strength constraint.
struct CompletionProblem {
    ObjectFamily base;
    std::size_t target_count = 0;
    std::size_t min_strength = 0;
    // Candidates, canonically sorted; empty means all lines of the ambient
    // space.
    std::vector<CodeObject> candidate_pool;
};

struct CompletionReport {
    std::uint64_t solution_count = 0;
    std::vector<ObjectFamily> solutions;  // Collect mode only
    std::uint64_t nodes_visited = 0;
    double elapsed_seconds = 0.0;
};

// Depth-first completion, candidates added in canonical non-decreasing order
// (multiset symmetry breaking). Solution sets are independent of the worker
// count.
CompletionReport complete_family(const CompletionProblem& p, SearchMode mode,
                                 unsigned workers = 1, const ProgressFn& progress = nullptr);

// Exact-multiplicity line coverage in V_m.
struct CoverageProblem {
    std::size_t ambient = 0;
    std::vector<CodeObject> fixed;  // lines that must be part of every solution
    std::vector<BitVector> forbidden_points;
    // Exact number of chosen lines through each listed point; unlisted points
    // are unconstrained.
    std::vector<std::pair<BitVector, int>> required_multiplicity;
    std::size_t total_lines = 0;
};

struct CoverageReport {
    std::uint64_t solution_count = 0;
    std::vector<std::vector<CodeObject>> solutions;  // sorted line lists
    std::uint64_t nodes_visited = 0;
    double elapsed_seconds = 0.0;
};

CoverageReport coverage_search(const CoverageProblem& p, SearchMode mode = SearchMode::Collect);

// Complete the rows of P in a systematic F4 generator matrix (I | P) so that
// every partial code keeps minimum distance >= min_distance.
struct F4CompletionProblem {
    std::vector<F4Vector> fixed_rows;
    std::size_t total_rows = 6;
    std::size_t min_distance = 6;
    // Optional symbol-frequency normalization on searched rows: counts of
    // 0, 1, w, W each row must carry (empty = unconstrained).
    std::vector<std::size_t> row_pattern;
};

struct F4CompletionReport {
    std::uint64_t solution_count = 0;
    std::vector<std::vector<F4Vector>> solutions;  // full row sets of P
    std::uint64_t nodes_visited = 0;
    double elapsed_seconds = 0.0;
};

F4CompletionReport f4_systematic_completion(const F4CompletionProblem& p,
                                            SearchMode mode = SearchMode::Collect);

}  // namespace adq
