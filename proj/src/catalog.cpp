#include "adq/catalog.hpp"

#include <sstream>
#include <stdexcept>

#include "adq/io.hpp"
#include "combinations.hpp"

namespace adq::catalog {

namespace {

void check(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("catalog self-check failed: " + what);
}

// Matrices are kept as string literals in display orientation and parsed;
// a transcription slip fails the self-checks instead of hiding.

const char* const kHexacodeP[] = {
    "111111",
    "11wwWW",
    "1WwW1w",
};

const char* const kFinalP[] = {
    "111111",
    "11wwWW",
    "0w1WwW",
    "W0Www1",
    "Ww0w1W",
    "w1W0wW",
};

// 3-row prefix: completes in exactly 12 ways.
const char* const kPrefix3[] = {
    "111111",
    "11wwWW",
    "0w1WwW",
};

// 4-row prefix: cannot be completed.
const char* const kPrefix4[] = {
    "111111",
    "11wwWW",
    "1WwW1w",
    "0w1WwW",
};

// The five 2-generator [7,1] codes, one generator per display row.
const char* const kConfigurations[5][2] = {
    {"10 10 10 10 10 10 00", "01 01 01 01 01 01 00"},
    {"10 10 10 10 10 10 00", "01 01 01 01 01 01 01"},
    {"10 10 10 10 10 01 00", "01 01 01 01 01 00 01"},
    {"10 10 10 10 01 01 00", "01 01 01 01 01 00 01"},
    {"10 10 10 10 10 10 10", "01 01 01 01 01 01 01"},
};

// Lines L1..L11 of the 22-line family, as spans over the basis e1..e9.
const char* const kLines1To11[11][2] = {
    {"e1", "e2"},
    {"e3", "e4"},
    {"e5", "e6"},
    {"e2+e3+e6", "e1+e2+e4+e5"},
    {"e2+e4+e5+e6", "e1+e3+e5"},
    {"e2+e3+e4+e5", "e1+e4+e6"},
    {"e2+e8", "e3+e4+e7+e8"},
    {"e3+e4+e8", "e1+e3+e7"},
    {"e1+e2+e7", "e1+e3+e8"},
    {"e4+e7", "e1+e2+e7+e8"},
    {"e2+e3+e6+e8", "e3+e4+e5+e7"},
};

// Lines L12..L22: column j holds the bit pair (g1, g2) of line 11+j in the
// row of basis vector e_i.
const char* const kLines12To22[9] = {
    "01 00 00 10 00 10 10 10 01 10 01",
    "11 01 01 00 00 00 00 11 10 10 01",
    "01 01 00 10 01 11 01 10 01 10 10",
    "10 00 00 10 11 10 10 00 10 00 00",
    "10 11 10 11 10 11 00 11 10 10 00",
    "10 10 11 01 00 10 10 11 00 01 10",
    "00 10 01 01 01 11 00 10 11 10 11",
    "10 01 10 10 10 10 11 10 00 01 01",
    "01 01 01 01 01 01 01 01 01 01 01",
};

std::vector<F4Vector> parse_rows(const char* const* rows, std::size_t count) {
    std::vector<F4Vector> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(F4Vector::from_string(rows[i]));
    return out;
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ' ') out.push_back(c);
    return out;
}

// "e2+e3+e6" -> bit vector over e1..e_dim.
BitVector parse_basis_sum(const std::string& expr, std::size_t dim) {
    BitVector v(dim);
    std::istringstream iss(expr);
    std::string term;
    while (std::getline(iss, term, '+')) {
        if (term.empty() || term[0] != 'e')
            throw std::logic_error("bad basis expression: " + expr);
        const std::size_t i = std::stoul(term.substr(1));
        if (i < 1 || i > dim) throw std::logic_error("basis index out of range: " + expr);
        v.set(i - 1, true);
    }
    return v;
}

// Rows (e_i | P_i) of the systematic matrix (I | P); the identity block is
// unit_width wide even when only a prefix of the rows is present.
std::vector<F4Vector> systematic_rows(const std::vector<F4Vector>& p_rows,
                                      std::size_t unit_width) {
    std::vector<F4Vector> rows;
    rows.reserve(p_rows.size());
    for (std::size_t i = 0; i < p_rows.size(); ++i) {
        F4Vector v(unit_width + p_rows[i].size());
        v[i] = F4Elem::one();
        for (std::size_t j = 0; j < p_rows[i].size(); ++j) v[unit_width + j] = p_rows[i][j];
        rows.push_back(std::move(v));
    }
    return rows;
}

bool triple_collinear(const F4Vector& a, const F4Vector& b, const F4Vector& c) {
    // Over the binary expansion: F2-rank of {phi(x), phi(wx)} for the three
    // points is twice the F4-rank.
    WordBasis basis;
    for (const auto* p : {&a, &b, &c}) {
        basis.insert(f4_expand(*p).word0());
        basis.insert(f4_expand(p->scaled(F4Elem::omega())).word0());
    }
    return basis.dim() <= 4;
}

}  // namespace

std::vector<F4Vector> hexacode_rows() { return parse_rows(kHexacodeP, 3); }

AdditiveCode hexacode() {
    AdditiveCode c = AdditiveCode::from_f4(hexacode_rows());
    check(c.n() == 6 && c.r() == 6, "hexacode is [6,3]");
    check(c.min_distance() == 4, "hexacode distance 4");
    return c;
}

std::vector<F4Vector> linear_12_6_6_rows() { return systematic_rows(parse_rows(kFinalP, 6), 6); }

AdditiveCode linear_12_6_6() {
    AdditiveCode c = AdditiveCode::from_f4(linear_12_6_6_rows());
    check(c.n() == 12 && c.r() == 12, "linear_12_6_6 is [12,6]");
    check(c.min_distance() == 6, "linear_12_6_6 distance 6");
    return c;
}

namespace {

F4CompletionProblem prefix_problem(const char* const* rows, std::size_t count) {
    F4CompletionProblem p;
    p.fixed_rows = parse_rows(rows, count);
    p.total_rows = 6;
    p.min_distance = 6;
    // Searched rows carry the normalization used to fix the prefix: one 0,
    // one 1, two w, two W per row.
    p.row_pattern = {1, 1, 2, 2};
    return p;
}

}  // namespace

F4CompletionProblem p3_completion() {
    F4CompletionProblem p = prefix_problem(kPrefix3, 3);
    // The 3-row prefix spans a [12,3] code of distance 6.
    AdditiveCode partial = AdditiveCode::from_f4(systematic_rows(p.fixed_rows, p.total_rows));
    check(partial.min_distance() >= 6, "3-row prefix keeps distance >= 6");
    return p;
}

// The displayed 4-row matrix spans a [12,4,5] code (the word
// z1 + w z2 + w z3 + z4 has weight 5), so no completion can reach
// distance 6; the search over it reports zero solutions.
F4CompletionProblem p4_completion() { return prefix_problem(kPrefix4, 4); }

std::vector<AdditiveCode> configurations() {
    std::vector<AdditiveCode> out;
    for (std::size_t i = 0; i < 5; ++i) {
        BinMatrix gen = BinMatrix::from_strings(
            {strip_spaces(kConfigurations[i][0]), strip_spaces(kConfigurations[i][1])});
        AdditiveCode c(7, 2, std::move(gen));
        check(c.min_distance() >= 6, "configuration distance >= 6");
        out.push_back(std::move(c));
    }
    // Structural spot checks from the displays.
    ObjectFamily f1 = family_from_code(out[0]);
    check(f1.objects[6].rank() == 0, "configuration 1 has a zero coordinate");
    ObjectFamily f5 = family_from_code(out[4]);
    for (const auto& o : f5.objects) check(o.rank() > 0, "configuration 5 has no zero coordinate");
    return out;
}

CompletionProblem configuration_completion(std::size_t index_1_based) {
    if (index_1_based < 1 || index_1_based > 5)
        throw std::invalid_argument("configuration index must be 1..5");
    AdditiveCode dual = configurations()[index_1_based - 1].symplectic_dual();
    check(dual.r() == 12, "configuration dual has binary dimension 12");
    CompletionProblem p;
    p.base = family_from_code(dual);
    p.target_count = 12;
    p.min_strength = 5;
    check(family_strength(p.base) >= 5, "configuration dual family has strength >= 5");
    return p;
}

std::vector<F4Vector> elliptic_quadric_points() {
    // Zero set of Q(x) = x0 x1 + x2^2 + x2 x3 + w x3^2; the binary part is
    // anisotropic because t^2 + t + w has no root in GF(4).
    for (std::uint8_t t = 0; t < 4; ++t) {
        const F4Elem e(t);
        check(!(e * e + e + F4Elem::omega()).is_zero(), "t^2 + t + w irreducible");
    }
    const F4Elem omega = F4Elem::omega();
    std::vector<F4Vector> points;
    for (std::uint32_t v = 1; v < 256; ++v) {
        F4Vector x(4);
        for (std::size_t i = 0; i < 4; ++i) x[i] = F4Elem(std::uint8_t((v >> (2 * (3 - i))) & 3));
        // canonical representative: first nonzero coordinate is 1
        std::size_t lead = 0;
        while (x[lead].is_zero()) ++lead;
        if (x[lead] != F4Elem::one()) continue;
        const F4Elem q = x[0] * x[1] + x[2] * x[2] + x[2] * x[3] + omega * x[3] * x[3];
        if (q.is_zero()) points.push_back(std::move(x));
    }
    check(points.size() == 17, "elliptic quadric has 17 points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            for (std::size_t k = j + 1; k < points.size(); ++k)
                check(!triple_collinear(points[i], points[j], points[k]),
                      "no 3 quadric points collinear");
    return points;
}

std::vector<F4Vector> quadric_matrix_rows() {
    const auto points = elliptic_quadric_points();
    std::vector<F4Vector> rows(4, F4Vector(points.size()));
    for (std::size_t j = 0; j < points.size(); ++j)
        for (std::size_t i = 0; i < 4; ++i) rows[i][j] = points[j][i];
    return rows;
}

AdditiveCode quadric_code_17_4_12() {
    AdditiveCode c = AdditiveCode::from_f4(quadric_matrix_rows());
    check(c.n() == 17 && c.r() == 8, "quadric code is [17,4]");
    check(c.min_distance() == 12, "quadric code distance 12");
    check(c.strength() == 3, "quadric code strength 3");
    return c;
}

AdditiveCode quadric_dual_17_13_4() {
    AdditiveCode d = quadric_code_17_4_12().symplectic_dual();
    check(d.n() == 17 && d.r() == 26, "quadric dual is [17,13]");
    return d;
}

CoverageProblem quadric_coverage_problem() {
    CoverageProblem p;
    p.ambient = 5;
    p.total_lines = 15;
    p.fixed.emplace_back(5, BitVector::from_string("01000"), BitVector::from_string("10100"));
    p.fixed.emplace_back(5, BitVector::from_string("00010"), BitVector::from_string("10001"));

    const BitVector special = BitVector::from_string("10000");
    long long sum = 0;
    for (std::uint32_t v = 1; v < 32; ++v) {
        BitVector pt(5);
        for (std::size_t i = 0; i < 5; ++i)
            if ((v >> i) & 1) pt.set(i, true);
        int mult;
        if (pt == special)
            mult = 0;  // the special point lies on none of the lines
        else if (pt.get(0))
            mult = 2;  // affine points off the hyperplane y1 = 0
        else
            mult = 1;  // points of the hyperplane
        p.required_multiplicity.emplace_back(pt, mult);
        sum += mult;
    }
    check(sum == 3 * (long long)p.total_lines, "coverage incidence budget");
    return p;
}

CompletionProblem quadric_extension_problem() {
    CompletionProblem p;
    p.base = lines_of_linear_code(quadric_matrix_rows());
    p.target_count = 18;
    p.min_strength = 3;
    check(p.base.size() == 17, "quadric line family has 17 lines");
    return p;
}

ObjectFamily code_22_4_5_family() {
    ObjectFamily f;
    f.ambient = 9;
    for (const auto& [g1, g2] : kLines1To11)
        f.objects.emplace_back(9, parse_basis_sum(g1, 9), parse_basis_sum(g2, 9));

    // Columns of the displayed block: first pair bits -> g1, second -> g2.
    std::vector<std::string> rows;
    for (const auto* row : kLines12To22) rows.push_back(strip_spaces(row));
    for (std::size_t j = 0; j < 11; ++j) {
        BitVector g1(9), g2(9);
        for (std::size_t i = 0; i < 9; ++i) {
            g1.set(i, rows[i][2 * j] == '1');
            g2.set(i, rows[i][2 * j + 1] == '1');
        }
        f.objects.emplace_back(9, g1, g2);
    }

    check(f.size() == 22, "22 lines");
    for (const auto& o : f.objects) check(o.rank() == 2, "every L_i is a line");

    // Two hexacode subfamilies inside the stated 6-dimensional subspaces.
    auto span_within = [&](const std::vector<std::size_t>& idx,
                           const std::vector<std::size_t>& coords) {
        WordBasis basis;
        std::uint64_t allowed = 0;
        for (auto c : coords) allowed |= std::uint64_t(1) << c;
        for (auto i : idx)
            for (std::size_t g = 0; g < 2; ++g) {
                const std::uint64_t w = f.objects[i].gen(g).word0();
                if (w & ~allowed) return false;
                basis.insert(w);
            }
        return basis.dim() == 6;
    };
    check(span_within({0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}),
          "L1..L6 span <e1..e6>");
    check(span_within({0, 1, 6, 7, 8, 9}, {0, 1, 2, 3, 6, 7}),
          "L1,L2,L7..L10 span <e1..e4,e7,e8>");
    return f;
}

AdditiveCode code_22_4_5() {
    AdditiveCode c = code_from_family(code_22_4_5_family());
    check(c.n() == 22 && c.r() == 9, "code is [22,4.5]");
    check(c.strength() == 3, "code has strength 3");
    return c;
}

namespace {

std::vector<Entry> build_entries() {
    std::vector<Entry> e;
    e.push_back({"hexacode", "f4 code", "[6,3,4] hexacode",
                 [] { return emit_code_f4(hexacode_rows()); }});
    e.push_back({"linear_12_6_6", "f4 code", "unique linear [12,6,6] code, systematic",
                 [] { return emit_code_f4(linear_12_6_6_rows()); }});
    e.push_back({"p3_partial", "problem", "3-row P prefix; 12 systematic completions",
                 [] { return emit_problem(p3_completion()); }});
    e.push_back({"p4_partial", "problem", "4-row P prefix; no systematic completion",
                 [] { return emit_problem(p4_completion()); }});
    for (std::size_t i = 1; i <= 5; ++i) {
        e.push_back({"config" + std::to_string(i), "code",
                     "[7,1] configuration " + std::to_string(i), [i] {
                         return emit_code_binary(configurations()[i - 1]);
                     }});
        e.push_back({"config" + std::to_string(i) + "_completion", "problem",
                     "strength-5 completion of the dual of configuration " + std::to_string(i),
                     [i] { return emit_problem(configuration_completion(i)); }});
    }
    e.push_back({"quadric_points", "f4 code",
                 "elliptic quadric of PG(3,4) as a 4x17 generator matrix",
                 [] { return emit_code_f4(quadric_matrix_rows()); }});
    e.push_back({"quadric_code_17_4_12", "f4 code", "linear [17,4,12] code of the quadric",
                 [] { return emit_code_f4(quadric_matrix_rows()); }});
    e.push_back({"quadric_dual_17_13_4", "code", "dual [17,13,4] code",
                 [] { return emit_code_binary(quadric_dual_17_13_4()); }});
    e.push_back({"quadric_coverage", "problem",
                 "exact-multiplicity coverage in PG(4,2); 246 solutions",
                 [] { return emit_problem(quadric_coverage_problem()); }});
    e.push_back({"quadric_extension", "problem",
                 "18th-line completion of the quadric family; no solutions",
                 [] { return emit_problem(quadric_extension_problem()); }});
    e.push_back({"code_22_4_5", "code", "[22,4.5] code of strength 3",
                 [] { return emit_code_binary(code_22_4_5()); }});
    e.push_back({"code_22_4_5_lines", "family", "the 22 lines in V9",
                 [] { return emit_family(code_22_4_5_family()); }});
    e.push_back({"code_22_17_5_4", "code", "[22,17.5,4] dual code",
                 [] { return emit_code_binary(code_22_4_5().symplectic_dual()); }});
    return e;
}

}  // namespace

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = build_entries();
    return e;
}

const Entry* find_entry(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace adq::catalog
