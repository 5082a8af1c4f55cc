#include <doctest.h>

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "adq/catalog.hpp"
#include "adq/search.hpp"

using namespace adq;

namespace {

// Brute-force completion oracle: every non-decreasing index tuple, validity
// checked only on the full family (independent of any engine pruning).
std::uint64_t oracle_complete(const ObjectFamily& base, const std::vector<CodeObject>& pool,
                              std::size_t target, std::size_t strength) {
    std::uint64_t count = 0;
    ObjectFamily f = base;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (f.size() == target) {
            if (family_strength(f) >= strength) ++count;
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            f.objects.push_back(pool[i]);
            rec(i);
            f.objects.pop_back();
        }
    };
    rec(0);
    return count;
}

}  // namespace

TEST_CASE("complete_family: a complete base is its own unique solution") {
    CompletionProblem p;
    p.base = family_from_code(catalog::hexacode());
    p.target_count = 6;
    p.min_strength = 3;
    const CompletionReport r = complete_family(p, SearchMode::Collect);
    CHECK(r.solution_count == 1);
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions[0].size() == 6);
}

TEST_CASE("complete_family: rejects bases violating the constraint") {
    CompletionProblem p;
    p.base.ambient = 4;
    const auto lines = enumerate_lines(4);
    p.base.objects = {lines[0], lines[0]};
    p.target_count = 3;
    p.min_strength = 2;
    CHECK_THROWS_AS(complete_family(p, SearchMode::Count), std::invalid_argument);
}

TEST_CASE("complete_family agrees with a brute-force oracle") {
    const auto pool = enumerate_lines(4);
    CompletionProblem p;
    p.base.ambient = 4;
    p.base.objects = {pool[0]};
    p.target_count = 2;
    p.min_strength = 2;

    const std::uint64_t expected2 = oracle_complete(p.base, pool, 2, 2);
    CHECK(complete_family(p, SearchMode::Count).solution_count == expected2);

    // depth 2: pairs of added lines
    p.target_count = 3;
    const std::uint64_t expected3 = oracle_complete(p.base, pool, 3, 2);
    const CompletionReport r = complete_family(p, SearchMode::Collect);
    CHECK(r.solution_count == expected3);
    CHECK(r.solutions.size() == expected3);

    // every solution re-verified independently
    for (const auto& fam : r.solutions) CHECK(family_strength(fam) >= 2);

    // count/collect/exists agreement
    CHECK(complete_family(p, SearchMode::Count).solution_count == r.solution_count);
    CHECK(complete_family(p, SearchMode::Exists).solution_count >= 1);
}

TEST_CASE("complete_family results are invariant under the worker count") {
    CompletionProblem p;
    p.base.ambient = 5;
    p.base.objects = {
        CodeObject(5, BitVector::from_string("10000"), BitVector::from_string("01000")),
        CodeObject(5, BitVector::from_string("00100"), BitVector::from_string("00010"))};
    p.target_count = 4;
    p.min_strength = 2;

    const CompletionReport one = complete_family(p, SearchMode::Collect, 1);
    const CompletionReport four = complete_family(p, SearchMode::Collect, 4);
    CHECK(one.solution_count == four.solution_count);
    CHECK(one.nodes_visited == four.nodes_visited);
    REQUIRE(one.solutions.size() == four.solutions.size());
    for (std::size_t i = 0; i < one.solutions.size(); ++i) {
        REQUIRE(one.solutions[i].size() == four.solutions[i].size());
        for (std::size_t j = 0; j < one.solutions[i].size(); ++j)
            CHECK(one.solutions[i].objects[j] == four.solutions[i].objects[j]);
    }
}

TEST_CASE("coverage_search: trivial and infeasible instances") {
    CoverageProblem p;
    p.ambient = 3;
    p.total_lines = 0;
    CHECK(coverage_search(p).solution_count == 1);  // the empty multiset

    p.total_lines = 1;
    p.required_multiplicity.emplace_back(BitVector::from_string("100"), 2);
    CHECK(coverage_search(p).solution_count == 0);
}

TEST_CASE("coverage_search: single-line instance in the Fano plane") {
    const auto lines = enumerate_lines(3);
    CoverageProblem p;
    p.ambient = 3;
    p.total_lines = 1;
    // require exactly the three points of lines[0], forbid the rest
    const auto pts = lines[0].points();
    std::set<std::string> on_line;
    for (const auto& q : pts) {
        p.required_multiplicity.emplace_back(q, 1);
        on_line.insert(q.to_string());
    }
    for (std::uint32_t v = 1; v < 8; ++v) {
        BitVector q(3);
        for (std::size_t i = 0; i < 3; ++i)
            if ((v >> i) & 1) q.set(i, true);
        if (!on_line.count(q.to_string())) p.forbidden_points.push_back(q);
    }
    const CoverageReport r = coverage_search(p);
    CHECK(r.solution_count == 1);
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions[0][0] == lines[0]);

    // no room for a second line: every other line meets a forbidden point
    p.total_lines = 2;
    CHECK(coverage_search(p).solution_count == 0);
}

TEST_CASE("coverage_search agrees with a brute-force multiset oracle") {
    const auto lines = enumerate_lines(4);
    // constraints generated from a known 4-line configuration
    const std::vector<std::size_t> chosen = {0, 9, 17, 30};
    std::map<std::string, int> counts;
    for (auto i : chosen)
        for (const auto& q : lines[i].points()) ++counts[q.to_string()];

    CoverageProblem p;
    p.ambient = 4;
    p.total_lines = 4;
    for (std::uint32_t v = 1; v < 16; ++v) {
        BitVector q(4);
        for (std::size_t i = 0; i < 4; ++i)
            if ((v >> i) & 1) q.set(i, true);
        const auto it = counts.find(q.to_string());
        p.required_multiplicity.emplace_back(q, it == counts.end() ? 0 : it->second);
    }

    // oracle over all non-decreasing 4-tuples of line indices
    std::uint64_t expected = 0;
    for (std::size_t a = 0; a < lines.size(); ++a)
        for (std::size_t b = a; b < lines.size(); ++b)
            for (std::size_t c = b; c < lines.size(); ++c)
                for (std::size_t d = c; d < lines.size(); ++d) {
                    std::map<std::string, int> got;
                    for (auto i : {a, b, c, d})
                        for (const auto& q : lines[i].points()) ++got[q.to_string()];
                    bool ok = true;
                    for (const auto& [pt, m] : p.required_multiplicity) {
                        const auto it = got.find(pt.to_string());
                        if ((it == got.end() ? 0 : it->second) != m) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) ++expected;
                }
    CHECK(expected >= 1);  // at least the seeding configuration

    const CoverageReport r = coverage_search(p);
    CHECK(r.solution_count == expected);

    // independent re-verification of each solution
    for (const auto& sol : r.solutions) {
        std::map<std::string, int> got;
        for (const auto& line : sol)
            for (const auto& q : line.points()) ++got[q.to_string()];
        for (const auto& [pt, m] : p.required_multiplicity) {
            const auto it = got.find(pt.to_string());
            CHECK((it == got.end() ? 0 : it->second) == m);
        }
    }
}

TEST_CASE("f4_systematic_completion: full matrix verifies as its own completion") {
    F4CompletionProblem p;
    p.fixed_rows = {F4Vector::from_string("111111"), F4Vector::from_string("11wwWW"),
                    F4Vector::from_string("0w1WwW"), F4Vector::from_string("W0Www1"),
                    F4Vector::from_string("Ww0w1W"), F4Vector::from_string("w1W0wW")};
    p.total_rows = 6;
    p.min_distance = 6;
    const F4CompletionReport r = f4_systematic_completion(p);
    CHECK(r.solution_count == 1);
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions[0] == p.fixed_rows);
}

TEST_CASE("f4_systematic_completion: an inconsistent prefix has no completion") {
    F4CompletionProblem p;
    p.fixed_rows = {F4Vector::from_string("000000")};  // weight 1 row (1|0...)
    p.total_rows = 6;
    p.min_distance = 6;
    const F4CompletionReport r = f4_systematic_completion(p);
    CHECK(r.solution_count == 0);
    CHECK(r.nodes_visited == 0);
}

TEST_CASE("f4_systematic_completion: row pattern constraint filters candidates") {
    // one free row with exactly one 1 and one w
    F4CompletionProblem p;
    p.fixed_rows = {F4Vector::from_string("1w")};
    p.total_rows = 2;
    p.min_distance = 1;
    p.row_pattern = {0, 1, 1, 0};
    const F4CompletionReport r = f4_systematic_completion(p);
    CHECK(r.solution_count == 2);  // "1w" and "w1"
}

TEST_CASE("f4_systematic_completion agrees with a brute-force oracle") {
    // all 2x4 systematic codes (I | P), P 2x2, with d >= 2
    F4CompletionProblem p;
    p.total_rows = 2;
    p.min_distance = 2;
    p.fixed_rows = {};
    // width comes from fixed rows; give one fixed row and search the other
    p.fixed_rows.push_back(F4Vector::from_string("1w"));

    std::uint64_t expected = 0;
    for (int v0 = 0; v0 < 4; ++v0)
        for (int v1 = 0; v1 < 4; ++v1) {
            F4Vector cand(2);
            cand[0] = F4Elem(std::uint8_t(v0));
            cand[1] = F4Elem(std::uint8_t(v1));
            // full code: rows (1 0 | 1 w), (0 1 | cand)
            std::vector<F4Vector> rows;
            F4Vector r1 = F4Vector::from_string("101w");
            F4Vector r2(4);
            r2[1] = F4Elem::one();
            r2[2] = cand[0];
            r2[3] = cand[1];
            bool ok = true;
            for (int l1 = 0; l1 < 4 && ok; ++l1)
                for (int l2 = 0; l2 < 4 && ok; ++l2) {
                    if (!l1 && !l2) continue;
                    F4Vector word = r1.scaled(F4Elem(std::uint8_t(l1))) +
                                    r2.scaled(F4Elem(std::uint8_t(l2)));
                    if (word.weight() < 2) ok = false;
                }
            if (ok) ++expected;
        }

    const F4CompletionReport r = f4_systematic_completion(p);
    CHECK(r.solution_count == expected);
    CHECK(expected > 0);
}
