#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "adq/catalog.hpp"
#include "adq/code.hpp"
#include "adq/errors.hpp"
#include "adq/geometry.hpp"
#include "adq/io.hpp"
#include "adq/search.hpp"
#include "adq/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw adq::parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

// Resolves a code argument: plain path, or catalog:<name>.
adq::CodeDocument load_code(const std::string& spec) {
    if (spec.rfind("catalog:", 0) == 0) {
        const std::string name = spec.substr(8);
        const adq::catalog::Entry* e = adq::catalog::find_entry(name);
        if (!e) throw adq::parse_error("unknown catalog entry: " + name);
        if (e->kind != "code" && e->kind != "f4 code")
            throw adq::parse_error("catalog entry '" + name + "' is not a code");
        return adq::parse_code_string(e->emit());
    }
    return adq::parse_code_string(read_file(spec));
}

std::string wd_string(const adq::WeightDistribution& wd) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < wd.counts.size(); ++i) {
        if (!wd.counts[i]) continue;
        if (!first) out << ' ';
        out << 'A' << i << '=' << wd.counts[i];
        first = false;
    }
    return out.str();
}

int cmd_analyze(const std::string& input, std::size_t limit) {
    const adq::CodeDocument doc = load_code(input);
    const adq::AdditiveCode& c = doc.code;
    std::cout << "format: " << (doc.format == adq::CodeFormat::F4 ? "f4" : "binary") << '\n';
    std::cout << "n: " << c.n() << '\n';
    std::cout << "k: " << c.k_string() << '\n';
    std::cout << "r: " << c.r() << '\n';

    if (c.r() <= limit) {
        const adq::WeightDistribution wd = c.weight_distribution(limit);
        std::cout << "d: " << wd.min_distance() << " (enumeration)\n";
        std::cout << "weight distribution: " << wd_string(wd) << '\n';
    } else {
        std::cout << "d: " << c.min_distance_auto(limit) << " (via dual strength)\n";
        std::cout << "weight distribution: skipped (r > " << limit << ")\n";
    }
    std::cout << "strength: " << c.strength() << '\n';
    std::cout << "symplectic self-dual: " << (c.is_symplectic_self_dual() ? "yes" : "no") << '\n';

    if (c.n() <= adq::kDefaultSubsetLimit) {
        const adq::BBLinearityResult bb = c.bb_linearity_test();
        std::cout << "f4-linear (even-span criterion): " << (bb.linear ? "yes" : "no");
        if (!bb.linear) {
            std::cout << "  [witness coordinates:";
            for (auto i : bb.witness) std::cout << ' ' << i;
            std::cout << ']';
        }
        std::cout << '\n';
    } else {
        std::cout << "f4-linear (even-span criterion): skipped (n > "
                  << adq::kDefaultSubsetLimit << ")\n";
    }
    std::cout << "f4-linear (omega closure): " << (c.is_f4_linear_literal() ? "yes" : "no")
              << '\n';
    return kExitOk;
}

int cmd_dual(const std::string& input, const std::string& output) {
    const adq::CodeDocument doc = load_code(input);
    write_output(output, adq::emit_code_binary(doc.code.symplectic_dual()));
    return kExitOk;
}

int cmd_convert(const std::string& input, const std::string& to, const std::string& output) {
    const adq::CodeDocument doc = load_code(input);
    if (to == "binary") {
        write_output(output, adq::emit_code_binary(doc.code));
        return kExitOk;
    }
    if (to == "f4") {
        const auto rows = adq::try_f4_rows(doc.code);
        if (!rows) throw adq::parse_error("code is not F4-linear; cannot emit symbol format");
        write_output(output, adq::emit_code_f4(*rows));
        return kExitOk;
    }
    throw adq::parse_error("unknown target format: " + to);
}

int cmd_catalog_list() {
    for (const auto& e : adq::catalog::entries())
        std::cout << e.name << "  [" << e.kind << "]  " << e.description << '\n';
    return kExitOk;
}

int cmd_catalog_emit(const std::string& name, const std::string& output) {
    const adq::catalog::Entry* e = adq::catalog::find_entry(name);
    if (!e) throw adq::parse_error("unknown catalog entry: " + name);
    write_output(output, e->emit());
    return kExitOk;
}

int cmd_search(const std::string& problem_spec, const std::string& mode_name, unsigned workers,
               bool progress, bool emit_solutions) {
    std::string text;
    if (problem_spec.rfind("catalog:", 0) == 0) {
        const adq::catalog::Entry* e = adq::catalog::find_entry(problem_spec.substr(8));
        if (!e) throw adq::parse_error("unknown catalog entry: " + problem_spec.substr(8));
        if (e->kind != "problem")
            throw adq::parse_error("catalog entry is not a search problem");
        text = e->emit();
    } else {
        text = read_file(problem_spec);
    }
    const adq::ProblemDocument doc = adq::parse_problem_string(text);

    adq::SearchMode mode = adq::SearchMode::Collect;
    if (mode_name == "count")
        mode = adq::SearchMode::Count;
    else if (mode_name == "exists")
        mode = adq::SearchMode::Exists;
    else if (mode_name != "collect")
        throw adq::parse_error("mode must be count, collect or exists");

    adq::ProgressFn progress_fn;
    if (progress)
        progress_fn = [](const std::string& msg) { std::cerr << "progress: " << msg << '\n'; };

    if (doc.completion) {
        const adq::CompletionReport r =
            adq::complete_family(*doc.completion, mode, workers, progress_fn);
        std::cout << "solutions: " << r.solution_count << '\n'
                  << "nodes: " << r.nodes_visited << '\n'
                  << "seconds: " << r.elapsed_seconds << '\n';
        if (emit_solutions)
            for (std::size_t i = 0; i < r.solutions.size(); ++i)
                std::cout << "solution " << i << '\n' << adq::emit_family(r.solutions[i]);
        return kExitOk;
    }
    if (doc.coverage) {
        const adq::CoverageReport r = adq::coverage_search(*doc.coverage, mode);
        std::cout << "solutions: " << r.solution_count << '\n'
                  << "nodes: " << r.nodes_visited << '\n'
                  << "seconds: " << r.elapsed_seconds << '\n';
        if (emit_solutions)
            for (std::size_t i = 0; i < r.solutions.size(); ++i) {
                adq::ObjectFamily fam{doc.coverage->ambient, r.solutions[i]};
                std::cout << "solution " << i << '\n' << adq::emit_family(fam);
            }
        return kExitOk;
    }
    if (doc.f4) {
        const adq::F4CompletionReport r = adq::f4_systematic_completion(*doc.f4, mode);
        std::cout << "solutions: " << r.solution_count << '\n'
                  << "nodes: " << r.nodes_visited << '\n'
                  << "seconds: " << r.elapsed_seconds << '\n';
        if (emit_solutions)
            for (std::size_t i = 0; i < r.solutions.size(); ++i) {
                std::cout << "solution " << i << '\n';
                for (const auto& row : r.solutions[i]) std::cout << row.to_string() << '\n';
            }
        return kExitOk;
    }
    throw adq::parse_error("empty problem document");
}

int cmd_verify(const std::string& tier, unsigned workers, bool progress,
               const std::string& records_path) {
    adq::verify::Options opts;
    opts.workers = workers;
    if (progress)
        opts.progress = [](const std::string& msg) { std::cerr << "progress: " << msg << '\n'; };

    const auto results = adq::verify::run_tier(tier, opts);

    std::ostringstream records;
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << "  " << r.label << "  ("
                  << r.seconds << "s)";
        if (!r.pass) std::cout << "  -- " << r.detail;
        std::cout << '\n';
        records << "criterion=" << r.id << " status=" << (r.pass ? "pass" : "fail")
                << " seconds=" << r.seconds;
        if (!r.detail.empty()) records << " detail=\"" << r.detail << '"';
        records << '\n';
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "all criteria passed" : "FAILURES present") << " (" << results.size()
              << " criteria, tier " << tier << ")\n";
    if (!records_path.empty()) write_output(records_path, records.str());
    return all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"additive quaternary code toolkit"};
    app.require_subcommand(1);

    std::string input, output, to_format = "binary", mode = "collect";
    std::string tier = "quick", records, name;
    std::size_t limit = adq::kDefaultEnumLimit;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    bool progress = false, emit_solutions = false;

    auto* analyze = app.add_subcommand("analyze", "report code parameters and linearity");
    analyze->add_option("input", input, "code file or catalog:<name>")->required();
    analyze->add_option("--limit", limit, "weight enumeration limit on r");

    auto* dual = app.add_subcommand("dual", "emit the symplectic dual");
    dual->add_option("input", input, "code file or catalog:<name>")->required();
    dual->add_option("-o,--output", output, "output file (default stdout)");

    auto* convert = app.add_subcommand("convert", "convert between code file formats");
    convert->add_option("input", input, "code file or catalog:<name>")->required();
    convert->add_option("--to", to_format, "target format: binary or f4")->required();
    convert->add_option("-o,--output", output, "output file (default stdout)");

    auto* cat = app.add_subcommand("catalog", "named constructions");
    auto* cat_list = cat->add_subcommand("list", "list catalog entries");
    auto* cat_emit = cat->add_subcommand("emit", "emit a catalog entry");
    cat_emit->add_option("name", name, "entry name")->required();
    cat_emit->add_option("-o,--output", output, "output file (default stdout)");
    cat->require_subcommand(1);

    auto* search = app.add_subcommand("search", "run a backtracking search");
    search->add_option("problem", input, "problem file or catalog:<name>")->required();
    search->add_option("--mode", mode, "count | collect | exists");
    search->add_option("--workers", workers, "worker threads");
    search->add_flag("--progress", progress, "progress checkpoints on stderr");
    search->add_flag("--emit", emit_solutions, "print solutions");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--tier", tier, "quick | standard | long");
    verify->add_option("--workers", workers, "worker threads");
    verify->add_flag("--progress", progress, "progress checkpoints on stderr");
    verify->add_option("--records", records, "write machine-readable records to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze) return cmd_analyze(input, limit);
        if (*dual) return cmd_dual(input, output);
        if (*convert) return cmd_convert(input, to_format, output);
        if (*cat_list) return cmd_catalog_list();
        if (*cat_emit) return cmd_catalog_emit(name, output);
        if (*search) return cmd_search(input, mode, workers, progress, emit_solutions);
        if (*verify) return cmd_verify(tier, workers, progress, records);
    } catch (const adq::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const adq::limit_error& e) {
        std::cerr << "limit exceeded: " << e.what() << '\n';
        return kExitLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFail;
    }
    return kExitUsage;
}
