#include <doctest.h>

#include "adq/catalog.hpp"
#include "adq/errors.hpp"
#include "adq/io.hpp"

using namespace adq;

TEST_CASE("binary code format: bit-exact round trip") {
    const std::string text = emit_code_binary(catalog::code_22_4_5());
    const CodeDocument doc = parse_code_string(text);
    CHECK(doc.format == CodeFormat::Binary);
    CHECK(emit_code_binary(doc.code) == text);
}

TEST_CASE("f4 code format: bit-exact round trip") {
    const std::string text = emit_code_f4(catalog::hexacode_rows());
    const CodeDocument doc = parse_code_string(text);
    CHECK(doc.format == CodeFormat::F4);
    REQUIRE(doc.f4_rows.has_value());
    CHECK(emit_code_f4(*doc.f4_rows) == text);
}

TEST_CASE("f4 -> binary -> f4 recovers the symbol rows") {
    const auto rows = catalog::linear_12_6_6_rows();
    const AdditiveCode code = parse_code_string(emit_code_binary(AdditiveCode::from_f4(rows))).code;
    const auto recovered = try_f4_rows(code);
    REQUIRE(recovered.has_value());
    CHECK(*recovered == rows);
}

TEST_CASE("try_f4_rows refuses non-linear codes") {
    CHECK_FALSE(try_f4_rows(catalog::code_22_4_5()).has_value());
}

TEST_CASE("family format: bit-exact round trip, including rank-0 objects") {
    ObjectFamily f = family_from_code(catalog::configurations()[0]);  // has a rank-0 object
    const std::string text = emit_family(f);
    const ObjectFamily parsed = parse_family_string(text);
    CHECK(emit_family(parsed) == text);
    CHECK(parsed.ambient == f.ambient);
    REQUIRE(parsed.size() == f.size());
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(parsed.objects[i] == f.objects[i]);
}

TEST_CASE("parse errors carry context") {
    CHECK_THROWS_AS(parse_code_string(""), parse_error);
    CHECK_THROWS_AS(parse_code_string("abc\n"), parse_error);
    CHECK_THROWS_AS(parse_code_string("2 1\n0101x\n"), parse_error);
    CHECK_THROWS_AS(parse_code_string("2 1\n01\n"), parse_error);       // wrong row length
    CHECK_THROWS_AS(parse_code_string("3 2 f4\n1w\n"), parse_error);    // wrong symbol count
    CHECK_THROWS_AS(parse_family_string("4 1\n2 1000\n"), parse_error); // missing generator
    CHECK_THROWS_AS(parse_family_string("4 1\n2 1000 1000\n"), parse_error);  // rank mismatch
}

TEST_CASE("problem formats round trip") {
    const std::string comp = emit_problem(catalog::quadric_extension_problem());
    CHECK(emit_problem(*parse_problem_string(comp).completion) == comp);

    const std::string cov = emit_problem(catalog::quadric_coverage_problem());
    CHECK(emit_problem(*parse_problem_string(cov).coverage) == cov);

    const std::string f4p = emit_problem(catalog::p3_completion());
    CHECK(emit_problem(*parse_problem_string(f4p).f4) == f4p);
}

TEST_CASE("completion problems can carry an explicit pool") {
    CompletionProblem p;
    p.base = family_from_code(catalog::hexacode());
    p.target_count = 7;
    p.min_strength = 2;
    p.candidate_pool = enumerate_lines(6);
    const std::string text = emit_problem(p);
    const auto parsed = parse_problem_string(text);
    REQUIRE(parsed.completion.has_value());
    CHECK(parsed.completion->candidate_pool.size() == p.candidate_pool.size());
    CHECK(emit_problem(*parsed.completion) == text);
}
