#include <doctest.h>

#include "adq/catalog.hpp"
#include "adq/geometry.hpp"

using namespace adq;

namespace {

// Independent collinearity oracle over GF(4): elimination on symbol triples.
constexpr int kMul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
constexpr int kInv[4] = {0, 1, 3, 2};

bool oracle_collinear(const F4Vector& a, const F4Vector& b, const F4Vector& c) {
    int m[3][4];
    const F4Vector* rows[3] = {&a, &b, &c};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = (*rows[i])[j].value();
    int rank = 0;
    for (int col = 0; col < 4 && rank < 3; ++col) {
        int pivot = -1;
        for (int i = rank; i < 3; ++i)
            if (m[i][col]) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const int inv = kInv[m[rank][col]];
        for (int j = 0; j < 4; ++j) m[rank][j] = kMul[inv][m[rank][j]];
        for (int i = 0; i < 3; ++i) {
            if (i == rank || !m[i][col]) continue;
            const int factor = m[i][col];
            for (int j = 0; j < 4; ++j) m[i][j] ^= kMul[factor][m[rank][j]];
        }
        ++rank;
    }
    return rank <= 2;
}

}  // namespace

TEST_CASE("every catalog entry builds and emits") {
    for (const auto& e : catalog::entries()) {
        INFO(e.name);
        CHECK_FALSE(e.emit().empty());
    }
    CHECK(catalog::find_entry("hexacode") != nullptr);
    CHECK(catalog::find_entry("nonsense") == nullptr);
}

TEST_CASE("hexacode entry: [6,3,4], self-dual, linear") {
    const AdditiveCode hexa = catalog::hexacode();
    CHECK(hexa.n() == 6);
    CHECK(hexa.k_string() == "3");
    CHECK(hexa.min_distance() == 4);
    CHECK(hexa.is_symplectic_self_dual());
    CHECK(hexa.bb_linearity_test().linear);
}

TEST_CASE("configurations: displayed structure") {
    const auto cfgs = catalog::configurations();
    REQUIRE(cfgs.size() == 5);
    for (const auto& c : cfgs) {
        CHECK(c.n() == 7);
        CHECK(c.r() == 2);
        CHECK(c.min_distance() >= 6);
        CHECK(c.symplectic_dual().r() == 12);
    }
    CHECK(family_from_code(cfgs[0]).objects[6].rank() == 0);
    for (const auto& o : family_from_code(cfgs[4]).objects) CHECK(o.rank() == 2);
}

TEST_CASE("elliptic quadric: 17-cap verified by an independent F4 oracle") {
    const auto points = catalog::elliptic_quadric_points();
    REQUIRE(points.size() == 17);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            for (std::size_t k = j + 1; k < points.size(); ++k)
                CHECK_FALSE(oracle_collinear(points[i], points[j], points[k]));
}

TEST_CASE("quadric codes: [17,4,12] and dual [17,13,4]") {
    const AdditiveCode quad = catalog::quadric_code_17_4_12();
    CHECK(quad.n() == 17);
    CHECK(quad.r() == 8);
    CHECK(quad.min_distance() == 12);
    CHECK(quad.strength() == 3);

    const AdditiveCode dual = catalog::quadric_dual_17_13_4();
    CHECK(dual.r() == 26);
    CHECK(dual.k_string() == "13");
    // d(dual) = strength(primal) + 1; the dual of the dual is the primal
    CHECK(dual.symplectic_dual().same_subspace(quad));
    CHECK(dual.symplectic_dual().strength() == 3);
}

TEST_CASE("the 22-line family: strength 3 and its dual [22,17.5]") {
    const ObjectFamily f = catalog::code_22_4_5_family();
    CHECK(f.ambient == 9);
    CHECK(f.size() == 22);
    for (const auto& o : f.objects) CHECK(o.rank() == 2);

    const AdditiveCode c = catalog::code_22_4_5();
    CHECK(c.strength() == 3);
    CHECK(c.k_string() == "4.5");
    const AdditiveCode d = c.symplectic_dual();
    CHECK(d.r() == 35);
    CHECK(d.k_string() == "17.5");
}

TEST_CASE("partial P prefixes: distances of the spanned codes") {
    const F4CompletionProblem p3 = catalog::p3_completion();
    CHECK(p3.fixed_rows.size() == 3);
    CHECK(p3.total_rows == 6);
    CHECK(p3.min_distance == 6);
    CHECK(p3.row_pattern == std::vector<std::size_t>{1, 1, 2, 2});

    const F4CompletionProblem p4 = catalog::p4_completion();
    CHECK(p4.fixed_rows.size() == 4);
    // the 4-row prefix extends the hexacode rows
    CHECK(p4.fixed_rows[2] == catalog::hexacode_rows()[2]);

    // The 3-row prefix spans a [12,3,6] code; the displayed 4-row prefix
    // spans a [12,4,5] code (which is why it admits no completion).
    auto span_d = [](const F4CompletionProblem& p) {
        std::vector<F4Vector> rows;
        for (std::size_t i = 0; i < p.fixed_rows.size(); ++i) {
            F4Vector v(12);
            v[i] = F4Elem::one();
            for (std::size_t j = 0; j < 6; ++j) v[6 + j] = p.fixed_rows[i][j];
            rows.push_back(std::move(v));
        }
        return AdditiveCode::from_f4(rows).min_distance();
    };
    CHECK(span_d(p3) == 6);
    CHECK(span_d(p4) == 5);
}

TEST_CASE("coverage instance bookkeeping") {
    const CoverageProblem p = catalog::quadric_coverage_problem();
    CHECK(p.ambient == 5);
    CHECK(p.total_lines == 15);
    CHECK(p.fixed.size() == 2);
    CHECK(p.required_multiplicity.size() == 31);  // every point constrained
    long long sum = 0;
    for (const auto& [pt, m] : p.required_multiplicity) sum += m;
    CHECK(sum == 45);
}
