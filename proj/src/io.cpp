#include "adq/io.hpp"

#include <algorithm>
#include <sstream>

#include "adq/errors.hpp"

namespace adq {

namespace {

std::string next_data_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) return line;
    }
    throw parse_error("unexpected end of input");
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> out;
    std::string t;
    while (iss >> t) out.push_back(t);
    return out;
}

std::size_t to_size(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw parse_error("");
        return v;
    } catch (...) {
        throw parse_error(std::string("invalid ") + what + ": '" + s + "'");
    }
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t') out.push_back(c);
    return out;
}

}  // namespace

CodeDocument parse_code(std::istream& in) {
    const auto header = tokens(next_data_line(in));
    if (header.size() == 2) {
        const std::size_t n = to_size(header[0], "length");
        const std::size_t r = to_size(header[1], "dimension");
        BinMatrix gen(0, 2 * n);
        for (std::size_t i = 0; i < r; ++i) {
            const std::string row = strip_spaces(next_data_line(in));
            if (row.size() != 2 * n)
                throw parse_error("generator row " + std::to_string(i + 1) + " has length " +
                                  std::to_string(row.size()) + ", expected " +
                                  std::to_string(2 * n));
            gen.append_row(BitVector::from_string(row));
        }
        return CodeDocument{CodeFormat::Binary, AdditiveCode(n, r, std::move(gen)), std::nullopt};
    }
    if (header.size() == 3 && header[2] == "f4") {
        const std::size_t n = to_size(header[0], "length");
        const std::size_t k = to_size(header[1], "dimension");
        std::vector<F4Vector> rows;
        for (std::size_t i = 0; i < k; ++i) {
            F4Vector v = F4Vector::from_string(next_data_line(in));
            if (v.size() != n)
                throw parse_error("symbol row " + std::to_string(i + 1) + " has length " +
                                  std::to_string(v.size()) + ", expected " + std::to_string(n));
            rows.push_back(std::move(v));
        }
        return CodeDocument{CodeFormat::F4, AdditiveCode::from_f4(rows), rows};
    }
    throw parse_error("bad code header: expected 'n r' or 'n k f4'");
}

CodeDocument parse_code_string(const std::string& text) {
    std::istringstream iss(text);
    return parse_code(iss);
}

std::string emit_code_binary(const AdditiveCode& c) {
    std::ostringstream out;
    out << c.n() << ' ' << c.r() << '\n';
    for (std::size_t i = 0; i < c.r(); ++i) out << c.generator().row(i).to_string() << '\n';
    return out.str();
}

std::string emit_code_f4(const std::vector<F4Vector>& rows) {
    std::ostringstream out;
    out << (rows.empty() ? 0 : rows[0].size()) << ' ' << rows.size() << " f4\n";
    for (const auto& v : rows) out << v.to_string() << '\n';
    return out.str();
}

std::optional<std::vector<F4Vector>> try_f4_rows(const AdditiveCode& c) {
    if (c.r() % 2 != 0) return std::nullopt;

    // Paired layout: rows (2i, 2i+1) = (phi(v), phi(w v)).
    bool paired = true;
    std::vector<F4Vector> rows;
    for (std::size_t i = 0; i < c.r() / 2; ++i) {
        F4Vector v = f4_compress(c.generator().row(2 * i));
        if (f4_expand(v.scaled(F4Elem::omega())) != c.generator().row(2 * i + 1)) {
            paired = false;
            break;
        }
        rows.push_back(std::move(v));
    }
    if (paired) return rows;

    if (!c.is_f4_linear_literal()) return std::nullopt;

    // Canonical echelon basis over F4, leading symbols normalized to 1.
    std::vector<F4Vector> basis;
    auto leading = [](const F4Vector& v) {
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) return j;
        return v.size();
    };
    for (std::size_t i = 0; i < c.r(); ++i) {
        F4Vector v = f4_compress(c.generator().row(i));
        for (const auto& b : basis) {
            const std::size_t lb = leading(b);
            if (!v[lb].is_zero()) v = v + b.scaled(v[lb]);  // leads are 1
        }
        const std::size_t lv = leading(v);
        if (lv == v.size()) continue;
        // scale so the leading symbol is 1: multiply by its inverse (x^2 = 1/x
        // for nonzero x since x^3 = 1)
        v = v.scaled(v[lv] * v[lv]);
        basis.push_back(std::move(v));
        std::sort(basis.begin(), basis.end(),
                  [&](const F4Vector& a, const F4Vector& b) { return leading(a) < leading(b); });
    }
    if (basis.size() != c.r() / 2) return std::nullopt;
    // Back-substitute for a unique reduced form.
    for (std::size_t i = basis.size(); i-- > 0;) {
        for (std::size_t j = 0; j < i; ++j) {
            const std::size_t li = leading(basis[i]);
            if (!basis[j][li].is_zero()) basis[j] = basis[j] + basis[i].scaled(basis[j][li]);
        }
    }
    return basis;
}

ObjectFamily parse_family(std::istream& in) {
    const auto header = tokens(next_data_line(in));
    if (header.size() != 2) throw parse_error("bad family header: expected 'm count'");
    ObjectFamily f;
    f.ambient = to_size(header[0], "ambient dimension");
    const std::size_t count = to_size(header[1], "object count");
    for (std::size_t i = 0; i < count; ++i) {
        const auto toks = tokens(next_data_line(in));
        if (toks.empty()) throw parse_error("empty object row");
        const std::size_t rank = to_size(toks[0], "object rank");
        if (rank > 2 || toks.size() != rank + 1)
            throw parse_error("object row must be 'rank g1 [g2]' with rank <= 2");
        auto gen_at = [&](std::size_t j) {
            BitVector v = BitVector::from_string(toks[j]);
            if (v.size() != f.ambient) throw parse_error("generator length != ambient dimension");
            return v;
        };
        CodeObject obj = rank == 0   ? CodeObject(f.ambient)
                         : rank == 1 ? CodeObject(f.ambient, gen_at(1))
                                     : CodeObject(f.ambient, gen_at(1), gen_at(2));
        if (obj.rank() != rank)
            throw parse_error("declared rank " + std::to_string(rank) +
                              " does not match generators");
        f.objects.push_back(std::move(obj));
    }
    return f;
}

ObjectFamily parse_family_string(const std::string& text) {
    std::istringstream iss(text);
    return parse_family(iss);
}

std::string emit_family(const ObjectFamily& f) {
    std::ostringstream out;
    out << f.ambient << ' ' << f.size() << '\n';
    for (const auto& o : f.objects) {
        out << o.rank();
        for (std::size_t g = 0; g < o.rank(); ++g) out << ' ' << o.gen(g).to_string();
        out << '\n';
    }
    return out.str();
}

ProblemDocument parse_problem(std::istream& in) {
    const auto header = tokens(next_data_line(in));
    ProblemDocument doc;
    if (header.size() == 3 && header[0] == "completion") {
        CompletionProblem p;
        p.target_count = to_size(header[1], "target count");
        p.min_strength = to_size(header[2], "strength");
        p.base = parse_family(in);
        std::string line;
        if (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line == "pool") {
                ObjectFamily pool = parse_family(in);
                if (pool.ambient != p.base.ambient)
                    throw parse_error("pool ambient differs from base");
                p.candidate_pool = std::move(pool.objects);
            } else if (!line.empty()) {
                throw parse_error("unexpected line after base family: '" + line + "'");
            }
        }
        doc.completion = std::move(p);
        return doc;
    }
    if (header.size() == 3 && header[0] == "coverage") {
        CoverageProblem p;
        p.ambient = to_size(header[1], "ambient dimension");
        p.total_lines = to_size(header[2], "line count");
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty()) continue;
            const auto toks = tokens(line);
            if (toks[0] == "fixed" && toks.size() == 3) {
                BitVector g1 = BitVector::from_string(toks[1]);
                BitVector g2 = BitVector::from_string(toks[2]);
                if (g1.size() != p.ambient || g2.size() != p.ambient)
                    throw parse_error("fixed line generator length != ambient");
                p.fixed.emplace_back(p.ambient, g1, g2);
            } else if (toks[0] == "mult" && toks.size() == 3) {
                BitVector pt = BitVector::from_string(toks[1]);
                if (pt.size() != p.ambient) throw parse_error("point length != ambient");
                p.required_multiplicity.emplace_back(pt, int(to_size(toks[2], "multiplicity")));
            } else if (toks[0] == "forbid" && toks.size() == 2) {
                BitVector pt = BitVector::from_string(toks[1]);
                if (pt.size() != p.ambient) throw parse_error("point length != ambient");
                p.forbidden_points.push_back(pt);
            } else {
                throw parse_error("bad coverage constraint line: '" + line + "'");
            }
        }
        doc.coverage = std::move(p);
        return doc;
    }
    if (header.size() == 3 && header[0] == "f4complete") {
        F4CompletionProblem p;
        p.total_rows = to_size(header[1], "total rows");
        p.min_distance = to_size(header[2], "minimum distance");
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty()) continue;
            const auto toks = tokens(line);
            if (toks[0] == "pattern") {
                if (toks.size() != 5) throw parse_error("pattern needs 4 symbol counts");
                for (int s = 0; s < 4; ++s)
                    p.row_pattern.push_back(to_size(toks[s + 1], "pattern count"));
                continue;
            }
            p.fixed_rows.push_back(F4Vector::from_string(line));
        }
        doc.f4 = std::move(p);
        return doc;
    }
    throw parse_error("unknown problem kind");
}

ProblemDocument parse_problem_string(const std::string& text) {
    std::istringstream iss(text);
    return parse_problem(iss);
}

std::string emit_problem(const CompletionProblem& p) {
    std::ostringstream out;
    out << "completion " << p.target_count << ' ' << p.min_strength << '\n';
    out << emit_family(p.base);
    if (!p.candidate_pool.empty()) {
        out << "pool\n";
        ObjectFamily pool{p.base.ambient, p.candidate_pool};
        out << emit_family(pool);
    }
    return out.str();
}

std::string emit_problem(const CoverageProblem& p) {
    std::ostringstream out;
    out << "coverage " << p.ambient << ' ' << p.total_lines << '\n';
    for (const auto& l : p.fixed)
        out << "fixed " << l.gen(0).to_string() << ' ' << l.gen(1).to_string() << '\n';
    for (const auto& [pt, mult] : p.required_multiplicity)
        out << "mult " << pt.to_string() << ' ' << mult << '\n';
    for (const auto& pt : p.forbidden_points) out << "forbid " << pt.to_string() << '\n';
    return out.str();
}

std::string emit_problem(const F4CompletionProblem& p) {
    std::ostringstream out;
    out << "f4complete " << p.total_rows << ' ' << p.min_distance << '\n';
    if (!p.row_pattern.empty()) {
        out << "pattern";
        for (auto c : p.row_pattern) out << ' ' << c;
        out << '\n';
    }
    for (const auto& v : p.fixed_rows) out << v.to_string() << '\n';
    return out.str();
}

}  // namespace adq
