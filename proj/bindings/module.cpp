#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "adq/catalog.hpp"
#include "adq/code.hpp"
#include "adq/errors.hpp"
#include "adq/geometry.hpp"
#include "adq/io.hpp"
#include "adq/search.hpp"
#include "adq/verify.hpp"

namespace py = pybind11;
using namespace adq;

namespace {

std::vector<std::string> f4_rows_to_strings(const std::vector<F4Vector>& rows) {
    std::vector<std::string> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.to_string());
    return out;
}

std::vector<F4Vector> strings_to_f4_rows(const std::vector<std::string>& rows) {
    std::vector<F4Vector> out;
    out.reserve(rows.size());
    for (const auto& s : rows) out.push_back(F4Vector::from_string(s));
    return out;
}

SearchMode parse_mode(const std::string& mode) {
    if (mode == "count") return SearchMode::Count;
    if (mode == "collect") return SearchMode::Collect;
    if (mode == "exists") return SearchMode::Exists;
    throw std::invalid_argument("mode must be count, collect or exists");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "additive quaternary codes and their line-family geometry";

    py::register_exception<parse_error>(m, "ParseError");
    py::register_exception<limit_error>(m, "LimitError");

    py::class_<WeightDistribution>(m, "WeightDistribution")
        .def_readonly("counts", &WeightDistribution::counts)
        .def("min_distance", &WeightDistribution::min_distance)
        .def("total", &WeightDistribution::total)
        .def("__eq__",
             [](const WeightDistribution& a, const WeightDistribution& b) { return a == b; });

    py::class_<CodeObject>(m, "CodeObject")
        .def_property_readonly("rank", &CodeObject::rank)
        .def_property_readonly("generators",
                               [](const CodeObject& o) {
                                   std::vector<std::string> g;
                                   for (std::size_t i = 0; i < o.rank(); ++i)
                                       g.push_back(o.gen(i).to_string());
                                   return g;
                               })
        .def("__eq__", [](const CodeObject& a, const CodeObject& b) { return a == b; })
        .def("__lt__", [](const CodeObject& a, const CodeObject& b) { return a < b; })
        .def("__repr__", [](const CodeObject& o) {
            std::ostringstream out;
            out << "CodeObject(rank=" << o.rank();
            for (std::size_t i = 0; i < o.rank(); ++i) out << ", " << o.gen(i).to_string();
            out << ")";
            return out.str();
        });

    py::class_<ObjectFamily>(m, "ObjectFamily")
        .def_readonly("ambient", &ObjectFamily::ambient)
        .def_readonly("objects", &ObjectFamily::objects)
        .def("__len__", &ObjectFamily::size)
        .def("strength", &family_strength)
        .def("hyperplane_deficiency",
             [](const ObjectFamily& f) { return hyperplane_deficiency(f); })
        .def("to_text", &emit_family);

    py::class_<AdditiveCode>(m, "AdditiveCode")
        .def_static("from_text",
                    [](const std::string& text) { return parse_code_string(text).code; })
        .def_static("from_f4_rows",
                    [](const std::vector<std::string>& rows) {
                        return AdditiveCode::from_f4(strings_to_f4_rows(rows));
                    })
        .def_property_readonly("n", &AdditiveCode::n)
        .def_property_readonly("r", &AdditiveCode::r)
        .def_property_readonly("k", [](const AdditiveCode& c) { return c.r() / 2.0; })
        .def("k_string", &AdditiveCode::k_string)
        .def("weight_distribution", &AdditiveCode::weight_distribution,
             py::arg("limit") = kDefaultEnumLimit)
        .def("min_distance", &AdditiveCode::min_distance, py::arg("limit") = kDefaultEnumLimit)
        .def("min_distance_auto", &AdditiveCode::min_distance_auto,
             py::arg("limit") = kDefaultEnumLimit)
        .def("strength", &AdditiveCode::strength)
        .def("symplectic_dual", &AdditiveCode::symplectic_dual)
        .def("is_symplectic_self_dual", &AdditiveCode::is_symplectic_self_dual)
        .def("bb_linearity_test",
             [](const AdditiveCode& c, std::size_t limit) {
                 const BBLinearityResult res = c.bb_linearity_test(limit);
                 return py::make_tuple(res.linear, res.witness);
             },
             py::arg("limit") = kDefaultSubsetLimit)
        .def("is_f4_linear_literal", &AdditiveCode::is_f4_linear_literal)
        .def("shorten", &AdditiveCode::shorten, py::arg("coord"))
        .def("concatenate_322", &AdditiveCode::concatenate_322)
        .def("family", &family_from_code)
        .def("to_text", &emit_code_binary)
        .def("f4_rows",
             [](const AdditiveCode& c) -> py::object {
                 const auto rows = try_f4_rows(c);
                 if (!rows) return py::none();
                 return py::cast(f4_rows_to_strings(*rows));
             })
        .def("__repr__", [](const AdditiveCode& c) {
            return "AdditiveCode([" + std::to_string(c.n()) + "," + c.k_string() + "])";
        });

    py::class_<BinaryLinearCode>(m, "BinaryLinearCode")
        .def_property_readonly("length", &BinaryLinearCode::length)
        .def_property_readonly("dim", &BinaryLinearCode::dim)
        .def("min_distance", &BinaryLinearCode::min_distance,
             py::arg("limit") = kDefaultEnumLimit)
        .def("weight_distribution", &BinaryLinearCode::weight_distribution,
             py::arg("limit") = kDefaultEnumLimit);

    m.def("qweight",
          [](const std::string& bits) { return qweight(BitVector::from_string(bits)); });
    m.def("griesmer_bound", &griesmer_bound, py::arg("dim"), py::arg("d"), py::arg("q"));
    m.def("code_from_family", &code_from_family);
    m.def("lines_of_linear_code", [](const std::vector<std::string>& rows) {
        return lines_of_linear_code(strings_to_f4_rows(rows));
    });
    m.def("enumerate_line_count",
          [](std::size_t dim) { return enumerate_lines(dim).size(); });

    // searches
    py::class_<CompletionReport>(m, "CompletionReport")
        .def_readonly("solution_count", &CompletionReport::solution_count)
        .def_readonly("solutions", &CompletionReport::solutions)
        .def_readonly("nodes_visited", &CompletionReport::nodes_visited)
        .def_readonly("elapsed_seconds", &CompletionReport::elapsed_seconds);
    py::class_<CoverageReport>(m, "CoverageReport")
        .def_readonly("solution_count", &CoverageReport::solution_count)
        .def_readonly("solutions", &CoverageReport::solutions)
        .def_readonly("nodes_visited", &CoverageReport::nodes_visited)
        .def_readonly("elapsed_seconds", &CoverageReport::elapsed_seconds);
    py::class_<F4CompletionReport>(m, "F4CompletionReport")
        .def_readonly("solution_count", &F4CompletionReport::solution_count)
        .def_property_readonly("solutions",
                               [](const F4CompletionReport& r) {
                                   std::vector<std::vector<std::string>> out;
                                   for (const auto& sol : r.solutions)
                                       out.push_back(f4_rows_to_strings(sol));
                                   return out;
                               })
        .def_readonly("nodes_visited", &F4CompletionReport::nodes_visited)
        .def_readonly("elapsed_seconds", &F4CompletionReport::elapsed_seconds);

    m.def(
        "run_search",
        [](const std::string& problem_text, const std::string& mode, unsigned workers) {
            const ProblemDocument doc = parse_problem_string(problem_text);
            const SearchMode sm = parse_mode(mode);
            py::object out;
            if (doc.completion)
                out = py::cast(complete_family(*doc.completion, sm, workers));
            else if (doc.coverage)
                out = py::cast(coverage_search(*doc.coverage, sm));
            else if (doc.f4)
                out = py::cast(f4_systematic_completion(*doc.f4, sm));
            else
                throw parse_error("empty problem document");
            return out;
        },
        py::arg("problem_text"), py::arg("mode") = "collect", py::arg("workers") = 1,
        "Run a search problem given in its text form.");

    // catalog
    auto cat = m.def_submodule("catalog", "named constructions");
    cat.def("names", [] {
        std::vector<std::string> names;
        for (const auto& e : catalog::entries()) names.push_back(e.name);
        return names;
    });
    cat.def("emit", [](const std::string& name) {
        const catalog::Entry* e = catalog::find_entry(name);
        if (!e) throw parse_error("unknown catalog entry: " + name);
        return e->emit();
    });
    cat.def("hexacode", &catalog::hexacode);
    cat.def("linear_12_6_6", &catalog::linear_12_6_6);
    cat.def("configurations", &catalog::configurations);
    cat.def("quadric_points",
            [] { return f4_rows_to_strings(catalog::elliptic_quadric_points()); });
    cat.def("quadric_code_17_4_12", &catalog::quadric_code_17_4_12);
    cat.def("quadric_dual_17_13_4", &catalog::quadric_dual_17_13_4);
    cat.def("code_22_4_5", &catalog::code_22_4_5);
    cat.def("code_22_4_5_family", &catalog::code_22_4_5_family);

    // verification tiers
    m.def(
        "verify",
        [](const std::string& tier, unsigned workers) {
            verify::Options opts;
            opts.workers = workers;
            std::vector<py::dict> out;
            for (const auto& r : verify::run_tier(tier, opts)) {
                py::dict d;
                d["id"] = r.id;
                d["label"] = r.label;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                d["seconds"] = r.seconds;
                out.push_back(std::move(d));
            }
            return out;
        },
        py::arg("tier") = "quick", py::arg("workers") = 1);
}
