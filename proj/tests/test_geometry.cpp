#include <doctest.h>

#include <random>
#include <set>

#include "adq/catalog.hpp"
#include "adq/errors.hpp"
#include "adq/geometry.hpp"

using namespace adq;

namespace {

AdditiveCode random_code(std::mt19937_64& rng, std::size_t max_n, std::size_t max_r) {
    for (;;) {
        const std::size_t n = 2 + rng() % (max_n - 1);
        const std::size_t r = 1 + rng() % std::min(max_r, 2 * n);
        BinMatrix gen(r, 2 * n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < 2 * n; ++j) gen.set(i, j, rng() & 1);
        if (rank(gen) != r) continue;
        return AdditiveCode(n, r, std::move(gen));
    }
}

bool all_rank2(const ObjectFamily& f) {
    for (const auto& o : f.objects)
        if (o.rank() != 2) return false;
    return true;
}

}  // namespace

TEST_CASE("enumerate_lines: counts and canonical strictly increasing order") {
    CHECK(enumerate_lines(3).size() == 7);
    CHECK(enumerate_lines(5).size() == 155);
    CHECK(enumerate_lines(8).size() == 10795);

    const auto lines = enumerate_lines(4);
    CHECK(lines.size() == 35);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        CHECK(lines[i].rank() == 2);
        // canonical: the stored generators are the two smallest points
        auto pts = lines[i].points();
        CHECK(lines[i].gen(0) < lines[i].gen(1));
        CHECK(lines[i].gen(1) < (lines[i].gen(0) ^ lines[i].gen(1)));
        if (i + 1 < lines.size()) CHECK(lines[i] < lines[i + 1]);
        seen.insert(pts[0].to_string() + pts[1].to_string());
    }
    CHECK(seen.size() == 35);
    CHECK_THROWS_AS(enumerate_lines(1), std::invalid_argument);
}

TEST_CASE("family_from_code: hexacode gives six lines, configuration 1 a zero object") {
    const ObjectFamily hexa = family_from_code(catalog::hexacode());
    CHECK(hexa.ambient == 6);
    CHECK(hexa.size() == 6);
    CHECK(all_rank2(hexa));

    const ObjectFamily cfg1 = family_from_code(catalog::configurations()[0]);
    CHECK(cfg1.objects[6].rank() == 0);
}

TEST_CASE("lines_of_linear_code: single symbol, hexacode, quadric") {
    const ObjectFamily single = lines_of_linear_code({F4Vector::from_string("1")});
    REQUIRE(single.size() == 1);
    CHECK(single.objects[0].rank() == 2);
    CHECK(single.objects[0].gen(0).to_string() == "01");
    CHECK(single.objects[0].gen(1).to_string() == "10");

    const ObjectFamily hexa = lines_of_linear_code(catalog::hexacode_rows());
    CHECK(hexa.size() == 6);
    CHECK(family_strength(hexa) == 3);

    const ObjectFamily quad = lines_of_linear_code(catalog::quadric_matrix_rows());
    CHECK(quad.ambient == 8);
    CHECK(quad.size() == 17);
    CHECK(family_strength(quad) == 3);

    CHECK_THROWS_AS(lines_of_linear_code({F4Vector::from_string("0")}), std::invalid_argument);
}

TEST_CASE("general_position: points and incident lines") {
    const BitVector p = BitVector::from_string("1000");
    const BitVector q = BitVector::from_string("0100");
    CHECK(general_position({CodeObject(4, p), CodeObject(4, q)}));

    const CodeObject line(4, p, q);
    CHECK_FALSE(general_position({line, CodeObject(4, p)}));
    CHECK_FALSE(general_position({line, CodeObject(4, p ^ q)}));
}

TEST_CASE("family_strength: conventions") {
    ObjectFamily f;
    f.ambient = 6;
    const auto lines = enumerate_lines(6);
    f.objects = {lines[0], lines[0]};  // duplicated line
    CHECK(family_strength(f) == 1);

    f.objects = {lines[0], CodeObject(6)};  // rank-0 object
    CHECK(family_strength(f) == 0);

    CHECK(family_strength(family_from_code(catalog::hexacode())) == 3);
}

TEST_CASE("hyperplane_deficiency: examples") {
    CHECK(hyperplane_deficiency(family_from_code(catalog::hexacode())) == 4);

    ObjectFamily single;
    single.ambient = 2;
    single.objects = {CodeObject(2, BitVector::from_string("01"), BitVector::from_string("10"))};
    CHECK(hyperplane_deficiency(single) == 1);
}

TEST_CASE("deficiency and family strength match the code-side quantities") {
    std::mt19937_64 rng(43);
    int strength_checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const AdditiveCode c = random_code(rng, 7, 9);
        const ObjectFamily f = family_from_code(c);
        CHECK(hyperplane_deficiency(f) == c.min_distance());
        if (all_rank2(f)) {
            CHECK(family_strength(f) == c.strength());
            ++strength_checked;
        }
    }
    CHECK(strength_checked > 10);
}

TEST_CASE("code_from_family: family round trip preserves objects and parameters") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const AdditiveCode c = random_code(rng, 6, 8);
        const ObjectFamily f = family_from_code(c);
        const AdditiveCode rebuilt = code_from_family(f);
        CHECK(rebuilt.n() == c.n());
        CHECK(rebuilt.r() == c.r());
        const ObjectFamily f2 = family_from_code(rebuilt);
        REQUIRE(f2.size() == f.size());
        for (std::size_t i = 0; i < f.size(); ++i) CHECK(f2.objects[i] == f.objects[i]);
        // same line spans => same weight enumerator
        CHECK(rebuilt.weight_distribution() == c.weight_distribution());
    }
}

TEST_CASE("code_from_family rejects families that do not span") {
    ObjectFamily f;
    f.ambient = 4;
    f.objects = {CodeObject(4, BitVector::from_string("1000"), BitVector::from_string("0100"))};
    CHECK_THROWS_AS(code_from_family(f), std::invalid_argument);
}
