// graphmax: maximal operators on finite graphs from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphmax/constants.hpp"
#include "graphmax/errors.hpp"
#include "graphmax/json_io.hpp"
#include "graphmax/search.hpp"
#include "graphmax/verify.hpp"

using namespace graphmax;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

Graph family_graph(const std::string& family, std::size_t n) {
    if (family == "complete") return complete(n);
    if (family == "star") return star(n);
    if (family == "path") return path(n);
    if (family == "cycle") return cycle(n);
    throw UsageError("unknown family '" + family + "' (expected complete, star, path or cycle)");
}

std::vector<std::size_t> parse_range(const std::string& text) {
    std::vector<std::size_t> out;
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            std::stringstream in(text);
            std::string item;
            while (std::getline(in, item, ',')) out.push_back(std::stoul(item));
        } else {
            const std::size_t lo = std::stoul(text.substr(0, colon));
            const std::size_t hi = std::stoul(text.substr(colon + 1));
            for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
        }
    } catch (const std::logic_error&) {
        throw UsageError("cannot parse range '" + text + "'");
    }
    return out;
}

std::vector<PExponent> parse_grid(const std::string& text) {
    std::vector<PExponent> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(PExponent::parse(item));
    return out;
}

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hardy-Littlewood maximal operators on finite graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", GRAPHMAX_VERSION);

    std::string graph_path, fn_path, out_path, family, p_text = "2", target_text = "variation";
    std::string format = "json";
    std::size_t n = 0;
    double alpha = 0.0;
    bool uncentered = false;

    auto add_graph_fn = [&](CLI::App* cmd) {
        cmd->add_option("--graph", graph_path, "Graph JSON file")->required()->check(CLI::ExistingFile);
        cmd->add_option("--fn", fn_path, "VertexFunction JSON file")->required()->check(CLI::ExistingFile);
        cmd->add_option("--alpha", alpha, "Fractional order in [0,1]")->check(CLI::Range(0.0, 1.0));
        cmd->add_flag("--uncentered", uncentered, "Use the uncentered operator");
        cmd->add_option("-o,--out", out_path, "Output file (default stdout)");
    };

    auto* gen = app.add_subcommand("gen", "Write a standard graph as JSON");
    gen->add_option("--family", family, "complete | star | path | cycle")->required();
    gen->add_option("--n", n, "Vertex count")->required();
    gen->add_option("-o,--out", out_path, "Output file (default stdout)");

    auto* maxop = app.add_subcommand("maxop", "Evaluate the maximal function");
    add_graph_fn(maxop);

    auto* var = app.add_subcommand("var", "p-variation of f and of its maximal function");
    add_graph_fn(var);
    var->add_option("--p", p_text, "Exponent (number or inf)");

    auto* norm = app.add_subcommand("norm", "l^p norm of f and of its maximal function");
    add_graph_fn(norm);
    norm->add_option("--p", p_text, "Exponent (number or inf)");

    auto* constant = app.add_subcommand("constant", "Look up a tabulated sharp constant");
    constant->add_option("--family", family, "complete | star")->required();
    constant->add_option("--n", n, "Vertex count")->required();
    constant->add_option("--p", p_text, "Exponent (ignored for the l2 target)");
    constant->add_option("--target", target_text, "variation | l2");

    SearchConfig cfg;
    std::string n_range, p_grid;
    bool two_level = false;
    bool scan = false;
    auto* search = app.add_subcommand("search", "Estimate a supremum ratio numerically");
    search->add_option("--graph", graph_path, "Graph JSON file")->check(CLI::ExistingFile);
    search->add_option("--family", family, "complete | star | path | cycle");
    search->add_option("--n", n, "Vertex count (with --family)");
    search->add_option("--target", target_text, "variation | norm");
    search->add_option("--p", p_text, "Exponent (number or inf)");
    search->add_option("--alpha", alpha, "Fractional order in [0,1]")->check(CLI::Range(0.0, 1.0));
    search->add_flag("--uncentered", uncentered, "Use the uncentered operator");
    search->add_option("--restarts", cfg.restarts, "Random restarts");
    search->add_option("--max-iters", cfg.max_iters, "Sweeps per restart");
    search->add_option("--seed", cfg.seed, "Random seed");
    search->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    search->add_flag("--two-level", two_level, "Scan two-valued functions instead (K_n, S_n)");
    search->add_flag("--scan", scan, "Conjecture scan over --n-range and --p-grid");
    search->add_option("--n-range", n_range, "Scan sizes, e.g. 3:8 or 3,5,7");
    search->add_option("--p-grid", p_grid, "Scan exponents, e.g. 0.5,0.75,1");
    search->add_option("-o,--out", out_path, "Output file (default stdout)");

    std::string suite_name = "all";
    VerifyOptions verify_options;
    bool timestamp = false;
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--suite", suite_name, "constants | extremizers | bounds | continuity | all");
    verify->add_option("--seed", verify_options.seed, "Random seed");
    verify->add_option("--restarts", verify_options.restarts, "Restarts per search");
    verify->add_option("--threads", verify_options.threads, "Worker threads (0 = all cores)");
    verify->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--timestamp", timestamp, "Record the UTC time in the report metadata");
    verify->add_option("-o,--out", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            emit(dump(to_json(family_graph(family, n))), out_path);
            return 0;
        }

        if (maxop->parsed() || var->parsed() || norm->parsed()) {
            const Graph g = graph_from_json(read_json_file(graph_path));
            const VertexFunction f = vertex_function_from_json(read_json_file(fn_path));
            const Centering centering = uncentered ? Centering::uncentered : Centering::centered;
            const VertexFunction m = maximal(g, f, Alpha(alpha), centering);
            if (maxop->parsed()) {
                emit(dump(to_json(m)), out_path);
                return 0;
            }
            const PExponent p = PExponent::parse(p_text);
            const bool variation = var->parsed();
            const double of_f = variation ? p_variation(g, f, p) : lp_norm(f, p);
            const double of_m = variation ? p_variation(g, m, p) : lp_norm(m, p);
            Json doc;
            doc["p"] = to_json(p);
            doc["alpha"] = round_significant(alpha);
            doc["centered"] = !uncentered;
            doc[variation ? "variation" : "norm"] = round_significant(of_f);
            doc[variation ? "maximal_variation" : "maximal_norm"] = round_significant(of_m);
            doc["ratio"] = of_f > 0.0 ? Json(round_significant(of_m / of_f)) : Json(nullptr);
            emit(dump(doc), out_path);
            return 0;
        }

        if (constant->parsed()) {
            const Family fam = parse_family(family);
            const Target target = parse_target(target_text);
            const ConstantResult c = target == Target::variation_ratio
                                         ? sharp_variation_constant(fam, n, PExponent::parse(p_text))
                                         : l2_norm(fam, n);
            emit(dump(to_json(c)), out_path);
            return 0;
        }

        if (search->parsed()) {
            cfg.target = parse_target(target_text);
            cfg.p = PExponent::parse(p_text);
            cfg.alpha = Alpha(alpha);
            cfg.centering = uncentered ? Centering::uncentered : Centering::centered;
            if (scan) {
                if (family.empty() || n_range.empty() || p_grid.empty()) {
                    throw UsageError("--scan needs --family, --n-range and --p-grid");
                }
                const auto ns = parse_range(n_range);
                const auto ps = parse_grid(p_grid);
                Json rows = Json::array();
                for (const auto& row : conjecture_scan(parse_family(family), ns, ps, cfg)) {
                    rows.push_back(to_json(row));
                }
                emit(dump(Json{{"scan", std::move(rows)}}), out_path);
                return 0;
            }
            std::optional<Graph> g;
            if (!graph_path.empty()) {
                g = graph_from_json(read_json_file(graph_path));
            } else if (!family.empty() && n > 0) {
                g = family_graph(family, n);
            } else {
                throw UsageError("search needs --graph or --family with --n");
            }
            const SearchReport report = two_level
                                            ? two_level_scan(*g, cfg.target, cfg.p, cfg.alpha, cfg.centering)
                                            : estimate_ratio(*g, cfg);
            Json doc = to_json(report);
            doc["graph"] = to_json(*g);
            emit(dump(doc), out_path);
            return 0;
        }

        if (verify->parsed()) {
            Suite suite;
            try {
                suite = parse_suite(suite_name);
            } catch (const DomainError& e) {
                throw UsageError(e.what());
            }
            Report report = run_verify(suite, verify_options);
            if (timestamp) report.metadata.timestamp = utc_now();
            emit(format == "csv" ? report_to_csv(report) : dump(to_json(report)), out_path);
            std::cerr << "verify " << suite_name << ": " << report.entries.size() << " entries, "
                      << report.failures() << " failed\n";
            return report.passed() ? 0 : kExitVerifyFailed;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
