#include "adq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "adq/catalog.hpp"
#include "adq/code.hpp"
#include "adq/geometry.hpp"

namespace adq::verify {

namespace {

using Clock = std::chrono::steady_clock;

class Checker {
  public:
    Checker(std::string id, std::string label) {
        result_.id = std::move(id);
        result_.label = std::move(label);
        result_.pass = true;
        start_ = Clock::now();
    }

    void require(bool ok, const std::string& what) {
        if (!ok) {
            result_.pass = false;
            if (!result_.detail.empty()) result_.detail += "; ";
            result_.detail += what;
        }
    }

    template <typename A, typename B>
    void require_eq(const A& got, const B& want, const std::string& what) {
        if (!(got == static_cast<A>(want))) {
            std::ostringstream oss;
            oss << what << ": got " << got << ", want " << want;
            require(false, oss.str());
        }
    }

    bool passing() const { return result_.pass; }

    CriterionResult finish() {
        result_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return result_;
    }

    CriterionResult finish_error(const std::string& what) {
        result_.pass = false;
        result_.detail = what;
        return finish();
    }

  private:
    CriterionResult result_;
    Clock::time_point start_;
};

WeightDistribution make_wd(std::size_t n, const std::map<std::size_t, std::uint64_t>& nonzero) {
    WeightDistribution wd;
    wd.counts.assign(n + 1, 0);
    for (const auto& [i, c] : nonzero) wd.counts[i] = c;
    return wd;
}

WeightDistribution linear_case_wd() {
    return make_wd(12, {{0, 1},
                        {6, 330},
                        {7, 396},
                        {8, 495},
                        {9, 1320},
                        {10, 990},
                        {11, 396},
                        {12, 168}});
}

WeightDistribution quantum_case_wd() {
    return make_wd(12, {{0, 1}, {6, 396}, {8, 1485}, {10, 1980}, {12, 234}});
}

CriterionResult c1_catalog(const Options&) {
    Checker ck("C1", "catalog self-checks");
    try {
        AdditiveCode hexa = catalog::hexacode();
        ck.require_eq(hexa.n(), std::size_t(6), "hexacode n");
        ck.require_eq(hexa.r(), std::size_t(6), "hexacode r");
        ck.require_eq(hexa.min_distance(), std::size_t(4), "hexacode d");

        AdditiveCode lin = catalog::linear_12_6_6();
        ck.require_eq(lin.min_distance(), std::size_t(6), "linear_12_6_6 d");
        ck.require_eq(lin.strength(), std::size_t(5), "linear_12_6_6 strength");
        ck.require(lin.weight_distribution() == linear_case_wd(),
                   "linear_12_6_6 weight distribution");

        AdditiveCode quad = catalog::quadric_code_17_4_12();  // 17 points + cap checked inside
        ck.require_eq(quad.min_distance(), std::size_t(12), "quadric code d");
        AdditiveCode quad_dual = catalog::quadric_dual_17_13_4();
        ck.require_eq(quad_dual.r(), std::size_t(26), "quadric dual r");
        ck.require_eq(quad_dual.min_distance(), std::size_t(4), "quadric dual d");

        AdditiveCode c22 = catalog::code_22_4_5();
        ck.require_eq(c22.strength(), std::size_t(3), "code_22_4_5 strength");
        AdditiveCode d22 = c22.symplectic_dual();
        ck.require_eq(d22.r(), std::size_t(35), "dual r = 35 (k = 17.5)");
        ck.require_eq(d22.k_string(), std::string("17.5"), "dual k string");
        ck.require_eq(d22.min_distance_auto(), std::size_t(4), "dual d = 4");
    } catch (const std::exception& e) {
        return ck.finish_error(e.what());
    }
    return ck.finish();
}

CriterionResult c2_shortening(const Options&) {
    Checker ck("C2", "shortening chain of the [22,17.5,4] code");
    try {
        AdditiveCode code = catalog::code_22_4_5().symplectic_dual();
        for (std::size_t i = 1; i <= 3; ++i) {
            code = code.shorten(0);
            ck.require_eq(code.n(), std::size_t(22 - i), "length after shortening");
            ck.require_eq(code.r(), std::size_t(35 - 2 * i), "dimension after shortening");
            // d via the strength of the dual line family
            const AdditiveCode dual = code.symplectic_dual();
            ck.require_eq(family_strength(family_from_code(dual)) + 1, std::size_t(4),
                          "d = 4 after shortening " + std::to_string(i) + "x");
        }
    } catch (const std::exception& e) {
        return ck.finish_error(e.what());
    }
    return ck.finish();
}

AdditiveCode random_code(std::mt19937_64& rng) {
    for (;;) {
        const std::size_t n = 2 + rng() % 7;                              // 2..8
        const std::size_t rmax = std::min<std::size_t>(10, 2 * n - 1);   // keep dual nonzero
        const std::size_t r = 1 + rng() % rmax;
        BinMatrix gen(0, 2 * n);
        for (std::size_t i = 0; i < r; ++i) {
            BitVector row(2 * n);
            for (std::size_t j = 0; j < 2 * n; ++j) row.set(j, rng() & 1);
            gen.append_row(row);
        }
        if (rank(gen) != r) continue;
        return AdditiveCode(n, r, std::move(gen));
    }
}

CriterionResult c3_duality(const Options&) {
    Checker ck("C3", "dual-distance/strength identity on 1000 random codes");
    try {
        std::mt19937_64 rng(0x5eed0a11dful);
        for (int trial = 0; trial < 1000 && ck.passing(); ++trial) {
            AdditiveCode c = random_code(rng);
            AdditiveCode dual = c.symplectic_dual();
            ck.require_eq(c.r() + dual.r(), 2 * c.n(), "r + r_dual = 2n");
            const std::size_t d_dual = dual.min_distance();
            ck.require_eq(d_dual, c.strength() + 1, "d(dual) = strength + 1");
            ck.require_eq(hyperplane_deficiency(family_from_code(dual)), d_dual,
                          "hyperplane deficiency cross-check");
            ck.require(dual.symplectic_dual().same_subspace(c), "dual is an involution");
        }
    } catch (const std::exception& e) {
        return ck.finish_error(e.what());
    }
    return ck.finish();
}

CriterionResult c4_concatenation(const Options&) {
    Checker ck("C4", "concatenation to [51,8,24] and the Griesmer step");
    try {
        AdditiveCode quad = catalog::quadric_code_17_4_12();
        BinaryLinearCode cc = quad.concatenate_322();
        ck.require_eq(cc.length(), std::size_t(51), "concatenated length");
        ck.require_eq(cc.dim(), std::size_t(8), "concatenated dimension");
        ck.require_eq(cc.min_distance(), std::size_t(24), "concatenated distance");

        // Binary weight doubles the quaternary weight, word by word.
        bool doubling = true;
        for (std::uint32_t mask = 0; mask < 256 && doubling; ++mask) {
            BitVector pre(2 * quad.n());
            BitVector post(cc.length());
            for (std::size_t i = 0; i < 8; ++i)
                if ((mask >> i) & 1) {
                    pre ^= quad.generator().row(i);
                    post ^= cc.generator().row(i);
                }
            doubling = post.popcount() == 2 * qweight(pre);
        }
        ck.require(doubling, "binary weight = 2 x quaternary weight for all words");

        ck.require_eq(griesmer_bound(7, 24, 2), std::uint64_t(49), "griesmer(7,24,2)");
        ck.require(griesmer_bound(7, 24, 2) > 48, "no binary [48,7,24] code");
    } catch (const std::exception& e) {
        return ck.finish_error(e.what());
    }
    return ck.finish();
}

CriterionResult c9_linearity(const Options&) {
    Checker ck("C9", "linearity tests on the catalog codes");
    try {
        AdditiveCode hexa = catalog::hexacode();
        AdditiveCode lin = catalog::linear_12_6_6();
        AdditiveCode quad = catalog::quadric_code_17_4_12();
        AdditiveCode quad_dual = catalog::quadric_dual_17_13_4();
        AdditiveCode c22 = catalog::code_22_4_5();

        ck.require(hexa.bb_linearity_test().linear, "hexacode even-span criterion");
        ck.require(lin.bb_linearity_test().linear, "linear_12_6_6 even-span criterion");
        ck.require(quad.bb_linearity_test().linear, "quadric code even-span criterion");
        ck.require(quad_dual.bb_linearity_test().linear, "quadric dual even-span criterion");

        const BBLinearityResult bb22 = c22.bb_linearity_test();
        ck.require(!bb22.linear, "code_22_4_5 is not linear");
        ck.require(!bb22.witness.empty(), "witness reported");
        // Witness re-verified independently: odd binary span.
        BinMatrix span(0, c22.r());
        for (auto i : bb22.witness) {
            span.append_row(c22.generator().column(2 * i));
            span.append_row(c22.generator().column(2 * i + 1));
        }
        ck.require(rank(span) % 2 == 1, "witness subset spans odd dimension");

        ck.require(hexa.is_f4_linear_literal(), "hexacode literal closure");
        ck.require(lin.is_f4_linear_literal(), "linear_12_6_6 literal closure");
        ck.require(quad.is_f4_linear_literal(), "quadric code literal closure");
        ck.require(quad_dual.is_f4_linear_literal(), "quadric dual literal closure");
        ck.require(!c22.is_f4_linear_literal(), "code_22_4_5 literal closure fails");
    } catch (const std::exception& e) {
        return ck.finish_error(e.what());
    }
    return ck.finish();
}

CriterionResult c5_systematic_completions(const Options&) {
    Checker ck("C5", "systematic P completions: 12 and 0");
    try {
        const F4CompletionReport r3 =
            f4_systematic_completion(catalog::p3_completion(), SearchMode::Collect);
        ck.require_eq(r3.solution_count, std::uint64_t(12), "3-row prefix completions");

        const WeightDistribution expected = linear_case_wd();
        for (const auto& sol : r3.solutions) {
            AdditiveCode code = AdditiveCode::from_f4([&] {
                std::vector<F4Vector> rows;
                const std::size_t k = sol.size();
                for (std::size_t i = 0; i < k; ++i) {
                    F4Vector v(k + sol[i].size());
                    v[i] = F4Elem::one();
                    for (std::size_t j = 0; j < sol[i].size(); ++j) v[k + j] = sol[i][j];
                    rows.push_back(std::move(v));
                }
                return rows;
            }());
            ck.require(code.weight_distribution() == expected,
                       "completion has the linear-case weight distribution");
        }

        const F4CompletionReport r4 =
            f4_systematic_completion(catalog::p4_completion(), SearchMode::Count);
        ck.require_eq(r4.solution_count, std::uint64_t(0), "4-row prefix completions");
    } catch (const std::exception& e) {
        return ck.finish_error(e.what());
    }
    return ck.finish();
}

CriterionResult c6_coverage(const Options&) {
    Checker ck("C6", "exact-multiplicity coverage in PG(4,2): 246 solutions");
    try {
        const CoverageProblem problem = catalog::quadric_coverage_problem();
        const CoverageReport report = coverage_search(problem, SearchMode::Collect);
        ck.require_eq(report.solution_count, std::uint64_t(246), "solution count");
        ck.require_eq(report.solutions.size(), std::size_t(246), "collected solutions");

        // Independent re-verification by direct incidence counting.
        for (const auto& sol : report.solutions) {
            std::map<std::string, int> hits;
            for (const auto& line : sol)
                for (const auto& pt : line.points()) ++hits[pt.to_string()];
            bool ok = sol.size() == problem.total_lines;
            for (const auto& [pt, mult] : problem.required_multiplicity) {
                const auto it = hits.find(pt.to_string());
                const int got = it == hits.end() ? 0 : it->second;
                ok = ok && got == mult;
            }
            // fixed lines must be present
            for (const auto& f : problem.fixed)
                ok = ok && std::count(sol.begin(), sol.end(), f) == 1;
            if (!ok) {
                ck.require(false, "a solution fails independent incidence recount");
                break;
            }
        }
    } catch (const std::exception& e) {
        return ck.finish_error(e.what());
    }
    return ck.finish();
}

CriterionResult c7_quadric_extension(const Options& opts) {
    Checker ck("C7", "no 18th line extends the quadric family at strength 3");
    try {
        const CompletionProblem problem = catalog::quadric_extension_problem();
        const CompletionReport report =
            complete_family(problem, SearchMode::Count, opts.workers, opts.progress);
        ck.require_eq(report.solution_count, std::uint64_t(0), "extension count");
    } catch (const std::exception& e) {
        return ck.finish_error(e.what());
    }
    return ck.finish();
}

CriterionResult c8_configuration_dichotomy(const Options& opts) {
    Checker ck("C8", "strength-5 completions of the configuration duals");
    try {
        const WeightDistribution lin_wd = linear_case_wd();
        const WeightDistribution qua_wd = quantum_case_wd();
        for (std::size_t cfg = 1; cfg <= 5; ++cfg) {
            const CompletionProblem problem = catalog::configuration_completion(cfg);
            const CompletionReport report =
                complete_family(problem, SearchMode::Collect, opts.workers, opts.progress);
            std::uint64_t linear_count = 0, quantum_count = 0;
            for (const auto& fam : report.solutions) {
                AdditiveCode code = code_from_family(fam);
                const WeightDistribution wd = code.weight_distribution();
                if (wd == lin_wd) {
                    ++linear_count;
                } else if (wd == qua_wd) {
                    ++quantum_count;
                    if (cfg == 4)
                        ck.require(code.is_symplectic_self_dual(),
                                   "configuration 4 completion is symplectic self-dual");
                } else {
                    ck.require(false, "completion outside the linear/quantum dichotomy");
                }
            }
            if (opts.progress)
                opts.progress("configuration " + std::to_string(cfg) + ": " +
                              std::to_string(report.solution_count) + " completions (" +
                              std::to_string(linear_count) + " linear-case, " +
                              std::to_string(quantum_count) + " quantum-case)");
            if (cfg == 2 || cfg == 3)
                ck.require_eq(report.solution_count, std::uint64_t(0),
                              "configuration " + std::to_string(cfg) + " yields none");
            if (cfg == 4) {
                ck.require(report.solution_count > 0, "configuration 4 yields completions");
                ck.require_eq(linear_count, std::uint64_t(0),
                              "configuration 4 yields only quantum-case codes");
            }
        }
    } catch (const std::exception& e) {
        return ck.finish_error(e.what());
    }
    return ck.finish();
}

}  // namespace

std::vector<CriterionResult> run_quick(const Options& opts) {
    std::vector<CriterionResult> out;
    out.push_back(c1_catalog(opts));
    out.push_back(c2_shortening(opts));
    out.push_back(c3_duality(opts));
    out.push_back(c4_concatenation(opts));
    out.push_back(c9_linearity(opts));
    return out;
}

std::vector<CriterionResult> run_standard_only(const Options& opts) {
    std::vector<CriterionResult> out;
    out.push_back(c5_systematic_completions(opts));
    out.push_back(c6_coverage(opts));
    out.push_back(c7_quadric_extension(opts));
    return out;
}

std::vector<CriterionResult> run_long_only(const Options& opts) {
    return {c8_configuration_dichotomy(opts)};
}

std::vector<CriterionResult> run_tier(const std::string& tier, const Options& opts) {
    std::vector<CriterionResult> out = run_quick(opts);
    if (tier == "standard" || tier == "long") {
        auto std_results = run_standard_only(opts);
        out.insert(out.end(), std_results.begin(), std_results.end());
    }
    if (tier == "long") {
        auto long_results = run_long_only(opts);
        out.insert(out.end(), long_results.begin(), long_results.end());
    }
    return out;
}

}  // namespace adq::verify
