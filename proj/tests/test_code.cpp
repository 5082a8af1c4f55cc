#include <doctest.h>

#include <array>
#include <random>

#include "adq/catalog.hpp"
#include "adq/code.hpp"
#include "adq/errors.hpp"
#include "adq/geometry.hpp"

using namespace adq;

namespace {

// Self-contained GF(4) arithmetic on 0..3 (0,1,w,W) for oracle computations.
constexpr int kMul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};

int sym(char c) { return c == '0' ? 0 : c == '1' ? 1 : c == 'w' ? 2 : 3; }

// All 4^k words of the linear code with the given symbol rows.
std::vector<std::vector<int>> oracle_codewords(const std::vector<std::string>& rows) {
    const std::size_t k = rows.size(), n = rows[0].size();
    std::vector<std::vector<int>> words;
    for (std::size_t mask = 0; mask < (std::size_t(1) << (2 * k)); ++mask) {
        std::vector<int> word(n, 0);
        for (std::size_t i = 0; i < k; ++i) {
            const int lambda = (mask >> (2 * i)) & 3;
            for (std::size_t j = 0; j < n; ++j)
                word[j] ^= kMul[lambda][sym(rows[i][j])];
        }
        words.push_back(std::move(word));
    }
    return words;
}

std::size_t oracle_weight(const std::vector<int>& word) {
    std::size_t w = 0;
    for (int s : word)
        if (s) ++w;
    return w;
}

const std::vector<std::string> kHexacodeRows = {"111111", "11wwWW", "1WwW1w"};

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

}  // namespace

TEST_CASE("qweight: examples and error") {
    CHECK(qweight(BitVector::from_string("000000")) == 0);
    CHECK(qweight(BitVector::from_string("011000")) == 2);
    CHECK_THROWS_AS(qweight(BitVector::from_string("010")), std::invalid_argument);
}

TEST_CASE("hexacode: weight distribution matches a symbol-level oracle") {
    std::array<std::uint64_t, 7> oracle_counts{};
    for (const auto& word : oracle_codewords(kHexacodeRows)) ++oracle_counts[oracle_weight(word)];
    CHECK(oracle_counts == std::array<std::uint64_t, 7>{1, 0, 0, 0, 45, 0, 18});

    const WeightDistribution wd = catalog::hexacode().weight_distribution();
    REQUIRE(wd.counts.size() == 7);
    for (std::size_t i = 0; i < 7; ++i) CHECK(wd.counts[i] == oracle_counts[i]);
    CHECK(wd.min_distance() == 4);
    CHECK(wd.total() == 64);
}

TEST_CASE("hexacode: qweight of expanded words equals the symbol weight") {
    for (const auto& word : oracle_codewords(kHexacodeRows)) {
        BitVector bits(12);
        for (std::size_t j = 0; j < 6; ++j) {
            bits.set(2 * j, (word[j] >> 1) & 1);
            bits.set(2 * j + 1, word[j] & 1);
        }
        CHECK(qweight(bits) == oracle_weight(word));
        // a word of binary weight 8 spread over 4 coordinate pairs
        if (oracle_weight(word) == 4 && bits.popcount() == 8) CHECK(qweight(bits) == 4);
    }
}

TEST_CASE("linear [12,6,6]: distance, strength and exact weight distribution") {
    const AdditiveCode c = catalog::linear_12_6_6();
    const WeightDistribution wd = c.weight_distribution();
    CHECK(wd.min_distance() == 6);
    CHECK(c.strength() == 5);
    const std::vector<std::uint64_t> expected{1, 0, 0, 0, 0,   0,   330, 396, 495, 1320,
                                              990, 396, 168};
    REQUIRE(wd.counts.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(wd.counts[i] == expected[i]);
}

TEST_CASE("weight distribution invariants on random codes") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const AdditiveCode c = random_code(rng, 8, 10);
        const WeightDistribution wd = c.weight_distribution();
        CHECK(wd.total() == (std::uint64_t(1) << c.r()));
        CHECK(wd.counts[0] == 1);
        CHECK(wd.min_distance() == c.min_distance());
    }
}

TEST_CASE("enumeration limit is enforced with a clear message") {
    const AdditiveCode c = catalog::hexacode();
    CHECK_THROWS_AS(c.weight_distribution(5), limit_error);
    CHECK_NOTHROW(c.weight_distribution(6));
}

TEST_CASE("degenerate generator matrices are rejected") {
    BinMatrix gen(2, 4);
    gen.set(0, 0, true);
    gen.set(1, 0, true);  // dependent rows
    CHECK_THROWS_AS(AdditiveCode(2, 2, gen), std::invalid_argument);
}

TEST_CASE("symplectic dual: dimensions, involution, zero code") {
    // dual of the full space is the zero code
    BinMatrix full(4, 4);
    for (std::size_t i = 0; i < 4; ++i) full.set(i, i, true);
    const AdditiveCode space(2, 4, full);
    const AdditiveCode zero = space.symplectic_dual();
    CHECK(zero.r() == 0);
    CHECK(zero.weight_distribution().total() == 1);
    CHECK(zero.min_distance() == 0);  // no nonzero words

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        const AdditiveCode c = random_code(rng, 7, 9);
        const AdditiveCode d = c.symplectic_dual();
        CHECK(c.r() + d.r() == 2 * c.n());
        CHECK(d.symplectic_dual().same_subspace(c));
    }
}

TEST_CASE("dual distance equals strength plus one") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        AdditiveCode c = random_code(rng, 6, 8);
        if (c.r() == 2 * c.n()) continue;  // zero dual
        CHECK(c.symplectic_dual().min_distance() == c.strength() + 1);
    }
}

TEST_CASE("symplectic self-duality: hexacode via an independent Gram oracle") {
    const AdditiveCode hexa = catalog::hexacode();
    REQUIRE(hexa.r() == hexa.n());
    // Gram matrix of symplectic products, computed bit by bit.
    for (std::size_t i = 0; i < hexa.r(); ++i)
        for (std::size_t j = 0; j < hexa.r(); ++j) {
            int form = 0;
            for (std::size_t p = 0; p < hexa.n(); ++p) {
                const int a = hexa.generator().get(i, 2 * p);
                const int b = hexa.generator().get(i, 2 * p + 1);
                const int cc = hexa.generator().get(j, 2 * p);
                const int d = hexa.generator().get(j, 2 * p + 1);
                form ^= (a & d) ^ (b & cc);
            }
            CHECK(form == 0);
        }
    CHECK(hexa.is_symplectic_self_dual());
    CHECK_FALSE(catalog::code_22_4_5().is_symplectic_self_dual());
}

TEST_CASE("even-span linearity test") {
    CHECK(catalog::hexacode().bb_linearity_test().linear);

    // odd binary dimension always fails, witness spans odd dimension
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        AdditiveCode c = random_code(rng, 6, 9);
        if (c.r() % 2 == 0) continue;
        const BBLinearityResult res = c.bb_linearity_test();
        CHECK_FALSE(res.linear);
        BinMatrix span(0, c.r());
        for (auto i : res.witness) {
            span.append_row(c.generator().column(2 * i));
            span.append_row(c.generator().column(2 * i + 1));
        }
        CHECK(rank(span) % 2 == 1);
    }
}

TEST_CASE("literal omega closure implies the even-span criterion") {
    CHECK(catalog::hexacode().is_f4_linear_literal());
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const AdditiveCode c = random_code(rng, 5, 8);
        if (c.is_f4_linear_literal()) CHECK(c.bb_linearity_test().linear);
    }
}

TEST_CASE("concatenation: hexacode maps to [18,6,8], checked by oracle") {
    const BinaryLinearCode cc = catalog::hexacode().concatenate_322();
    CHECK(cc.length() == 18);
    CHECK(cc.dim() == 6);

    std::size_t oracle_min = 18;
    for (const auto& word : oracle_codewords(kHexacodeRows)) {
        std::size_t wt = 0;
        for (int s : word) {
            const int a = (s >> 1) & 1, b = s & 1;
            wt += a + b + (a ^ b);
        }
        if (wt) oracle_min = std::min(oracle_min, wt);
    }
    CHECK(oracle_min == 8);
    CHECK(cc.min_distance() == 8);
}

TEST_CASE("concatenation doubles quaternary weight word by word") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        const AdditiveCode c = random_code(rng, 6, 8);
        const BinaryLinearCode cc = c.concatenate_322();
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << c.r()); ++mask) {
            BitVector pre(2 * c.n()), post(cc.length());
            for (std::size_t i = 0; i < c.r(); ++i)
                if ((mask >> i) & 1) {
                    pre ^= c.generator().row(i);
                    post ^= cc.generator().row(i);
                }
            CHECK(post.popcount() == 2 * qweight(pre));
        }
    }
}

TEST_CASE("griesmer bound") {
    CHECK(griesmer_bound(7, 24, 2) == 49);
    CHECK(griesmer_bound(4, 12, 4) == 17);
    for (std::size_t d = 1; d <= 10; ++d) CHECK(griesmer_bound(1, d, 2) == d);
    CHECK_THROWS_AS(griesmer_bound(0, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(griesmer_bound(3, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(griesmer_bound(3, 5, 1), std::invalid_argument);
}

TEST_CASE("shorten: bookkeeping, monotone distance, zero code") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const AdditiveCode c = random_code(rng, 6, 8);
        const std::size_t coord = rng() % c.n();
        if (c.n() < 2) continue;
        const AdditiveCode s = c.shorten(coord);
        CHECK(s.n() == c.n() - 1);
        CHECK(s.r() <= c.r());
        CHECK(s.r() + 2 >= c.r());
        if (s.r() > 0) CHECK(s.min_distance() >= c.min_distance());
    }

    // zero code shortens to the zero code of length n-1
    BinMatrix full(4, 4);
    for (std::size_t i = 0; i < 4; ++i) full.set(i, i, true);
    const AdditiveCode zero = AdditiveCode(2, 4, full).symplectic_dual();
    const AdditiveCode shortened = zero.shorten(0);
    CHECK(shortened.n() == 1);
    CHECK(shortened.r() == 0);

    CHECK_THROWS_AS(catalog::hexacode().shorten(6), std::invalid_argument);
}

TEST_CASE("k is reported as a half-integer when r is odd") {
    CHECK(catalog::hexacode().k_string() == "3");
    CHECK(catalog::code_22_4_5().k_string() == "4.5");
}
