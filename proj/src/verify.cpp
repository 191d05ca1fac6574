#include "graphmax/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphmax/constants.hpp"
#include "graphmax/errors.hpp"

#ifndef GRAPHMAX_VERSION
#define GRAPHMAX_VERSION "0.0.0"
#endif

namespace graphmax {

std::string_view to_string(EntryStatus status) {
    switch (status) {
        case EntryStatus::pass:
            return "pass";
        case EntryStatus::fail:
            return "fail";
        case EntryStatus::info:
            return "info";
    }
    return "info";
}

void Report::check(ReportEntry entry) {
    const bool ok = entry.expected && std::isfinite(entry.computed) &&
                    std::fabs(entry.computed - *entry.expected) <= entry.tolerance;
    entry.status = ok ? EntryStatus::pass : EntryStatus::fail;
    entries.push_back(std::move(entry));
}

void Report::info(ReportEntry entry) {
    entry.expected.reset();
    entry.status = EntryStatus::info;
    entries.push_back(std::move(entry));
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) {
        return e.status == EntryStatus::fail;
    }));
}

bool Report::passed() const { return failures() == 0; }

std::string_view to_string(Suite suite) {
    switch (suite) {
        case Suite::constants:
            return "constants";
        case Suite::extremizers:
            return "extremizers";
        case Suite::bounds:
            return "bounds";
        case Suite::continuity:
            return "continuity";
        case Suite::all:
            return "all";
    }
    return "all";
}

Suite parse_suite(std::string_view name) {
    for (Suite s : {Suite::constants, Suite::extremizers, Suite::bounds, Suite::continuity,
                    Suite::all}) {
        if (name == to_string(s)) return s;
    }
    throw DomainError("unknown suite '" + std::string(name) + "'");
}

namespace {

ReportEntry entry(std::string name, std::string family, std::optional<std::size_t> n,
                  std::optional<PExponent> p, std::optional<double> expected, double computed,
                  double tolerance) {
    ReportEntry e;
    e.name = std::move(name);
    e.family = std::move(family);
    e.n = n;
    e.p = p;
    e.expected = expected;
    e.computed = computed;
    e.tolerance = tolerance;
    return e;
}

double status_code(ProofStatus s) { return static_cast<double>(static_cast<int>(s)); }

void check_constant(Report& report, const std::string& name, Family family, std::size_t n,
                    std::optional<PExponent> p, const ConstantResult& got,
                    std::optional<double> expected_value, ProofStatus expected_status) {
    const std::string fam(to_string(family));
    report.check(entry(name + " status", fam, n, p, status_code(expected_status),
                       status_code(got.status), 0.0));
    if (expected_value) {
        report.check(entry(name, fam, n, p, expected_value, got.value.value_or(NAN), 1e-12));
    }
}

void constants_suite(Report& report) {
    const double sqrt43 = std::sqrt(4.0 / 3.0);
    const double k2 = std::sqrt(3.0 + std::sqrt(5.0)) / 2.0;
    struct Case {
        Family family;
        std::size_t n;
        double p;
        std::optional<double> value;
        ProofStatus status;
    };
    const Case variation_cases[] = {
        {Family::complete, 4, 0.5, 0.75, ProofStatus::proved},
        {Family::complete, 10, 2.0, 0.9, ProofStatus::proved},
        {Family::complete, 10, 0.5, 0.9, ProofStatus::conjectured},
        {Family::complete, 5, 0.78, 0.8, ProofStatus::proved},
        {Family::complete, 5, 0.77, 0.8, ProofStatus::conjectured},
        {Family::complete, 3, 0.3, 2.0 / 3.0, ProofStatus::proved},
        {Family::complete, 6, INFINITY, 5.0 / 6.0, ProofStatus::conjectured},
        {Family::star, 3, 2.0, std::sqrt(5.0) / 3.0, ProofStatus::proved},
        {Family::star, 7, 1.0, 6.0 / 7.0, ProofStatus::proved},
        {Family::star, 6, 0.3, 5.0 / 6.0, ProofStatus::conjectured},
        {Family::star, 4, 0.3, 0.75, ProofStatus::proved},
        {Family::star, 8, 0.5, 0.875, ProofStatus::proved},
        {Family::star, 5, 2.0, std::nullopt, ProofStatus::unknown},
    };
    for (const auto& c : variation_cases) {
        const PExponent p(c.p);
        check_constant(report, "sharp variation constant", c.family, c.n, p,
                       sharp_variation_constant(c.family, c.n, p), c.value, c.status);
    }

    for (std::size_t n : {3, 6, 9, 12}) {
        check_constant(report, "l2 norm", Family::complete, n, PExponent(2.0), l2_norm_complete(n),
                       sqrt43, ProofStatus::proved);
    }
    check_constant(report, "l2 norm", Family::complete, 2, PExponent(2.0), l2_norm_complete(2), k2,
                   ProofStatus::proved);
    check_constant(report, "l2 norm", Family::star, 2, PExponent(2.0), l2_norm_star(2), k2,
                   ProofStatus::proved);
    check_constant(report, "l2 norm", Family::star, 4, PExponent(2.0), l2_norm_star(4),
                   std::sqrt(1.0 + std::sqrt(48.0) / 8.0), ProofStatus::proved);
    check_constant(report, "l2 norm", Family::star, 3, PExponent(2.0), l2_norm_star(3),
                   std::nullopt, ProofStatus::unknown);

    struct Bounded {
        std::size_t n;
        double p, q, alpha, value;
    };
    for (const auto& b : {Bounded{3, 1.0, 1.0, 0.0, 3.0}, Bounded{2, INFINITY, 1.0, 0.0, 1.0},
                          Bounded{4, 2.0, 2.0, 0.0, std::sqrt(18.0)}}) {
        report.check(entry("boundedness constant (q=" + PExponent(b.q).to_string() + ")", "", b.n,
                           PExponent(b.p), b.value,
                           boundedness_constant(b.n, PExponent(b.p), PExponent(b.q), Alpha(b.alpha)),
                           1e-12));
    }
}

void extremizers_suite(Report& report) {
    for (std::size_t n = 2; n <= 10; ++n) {
        const Graph g = complete(n);
        for (double pv : {0.78, 1.0, 1.5, 2.0, 4.0}) {
            const PExponent p(pv);
            report.check(entry("delta variation ratio", "complete", n, p, 1.0 - 1.0 / double(n),
                               variation_ratio(g, extremizer_delta(g, 1), p).ratio, 1e-12));
        }
        report.check(entry("delta norm ratio", "complete", n, PExponent(2.0),
                           std::sqrt(1.0 + double(n - 1) / double(n * n)),
                           norm_ratio(g, extremizer_delta(g, 1), PExponent(2.0)).ratio, 1e-12));
    }
    for (std::size_t n = 2; n <= 8; ++n) {
        const Graph g = star(n);
        for (double pv : {0.5, 0.75, 1.0}) {
            const PExponent p(pv);
            report.check(entry("leaf delta variation ratio", "star", n, p, 1.0 - 1.0 / double(n),
                               variation_ratio(g, extremizer_delta(g, 1), p).ratio, 1e-12));
        }
    }
    const Graph s3 = star(3);
    for (double pv : {1.5, 2.0, 3.0, 4.0}) {
        const PExponent p(pv);
        report.check(entry("S_3 extremizer triple", "star", 3, p, star3_variation_value(p),
                           variation_ratio(s3, extremizer_star_variation(p), p).ratio, 1e-12));
    }
    for (std::size_t n = 3; n <= 8; ++n) {
        const double nd = double(n);
        std::vector<double> values(n, nd - 1.0);
        values[0] = nd;
        values[1] = 2.0 * nd - 1.0;
        report.check(entry("two-level p=2 example", "star", n, PExponent(2.0),
                           std::sqrt((nd - 1.0) * (nd - 1.0) + (nd - 2.0)) / nd,
                           variation_ratio(star(n), VertexFunction(values), PExponent(2.0)).ratio,
                           1e-12));
    }
    for (std::size_t n = 2; n <= 12; ++n) {
        const auto f = extremizer_complete_l2(n, l2_argmax_level_size(n));
        report.check(entry("g_k l2 extremizer", "complete", n, PExponent(2.0),
                           *l2_norm_complete(n).value,
                           norm_ratio(complete(n), f, PExponent(2.0)).ratio, 1e-9));
    }
    for (std::size_t n = 4; n <= 12; ++n) {
        report.check(entry("center gamma l2 extremizer", "star", n, PExponent(2.0),
                           *l2_norm_star(n).value,
                           norm_ratio(star(n), extremizer_star_l2(n), PExponent(2.0)).ratio, 1e-9));
    }
}

void search_checks(Report& report, const std::string& name, Family family, std::size_t n,
                   Target target, PExponent p, double expected, const SearchConfig& base) {
    SearchConfig cfg = base;
    cfg.target = target;
    cfg.p = p;
    const SearchReport result = estimate_ratio(make_family(family, n), cfg);
    const std::string fam(to_string(family));
    report.check(entry(name, fam, n, p, expected, result.best_ratio, 1e-6));
    report.check(entry(name + " overshoot", fam, n, p, 0.0,
                       std::max(0.0, result.best_ratio - expected), 1e-9));
}

void bounds_suite(Report& report, const VerifyOptions& options) {
    SearchConfig base;
    base.seed = options.seed;
    base.restarts = options.restarts;
    base.threads = options.threads;

    for (std::size_t n = 3; n <= 8; ++n) {
        for (double pv : {1.5, 2.0, 3.0}) {
            search_checks(report, "variation search", Family::complete, n, Target::variation_ratio,
                          PExponent(pv), 1.0 - 1.0 / double(n), base);
        }
    }
    for (double pv : {0.2, 0.5, 0.9}) {
        search_checks(report, "variation search", Family::complete, 4, Target::variation_ratio,
                      PExponent(pv), 0.75, base);
    }
    for (double pv : {1.5, 2.0, 4.0}) {
        search_checks(report, "variation search", Family::star, 3, Target::variation_ratio,
                      PExponent(pv), star3_variation_value(PExponent(pv)), base);
    }
    for (std::size_t n = 4; n <= 8; ++n) {
        for (double pv : {0.5, 0.75, 1.0}) {
            search_checks(report, "variation search", Family::star, n, Target::variation_ratio,
                          PExponent(pv), 1.0 - 1.0 / double(n), base);
        }
    }
    for (std::size_t n = 2; n <= 12; ++n) {
        search_checks(report, "l2 norm search", Family::complete, n, Target::norm_ratio,
                      PExponent(2.0), *l2_norm_complete(n).value, base);
    }
    for (std::size_t n = 4; n <= 12; ++n) {
        search_checks(report, "l2 norm search", Family::star, n, Target::norm_ratio, PExponent(2.0),
                      *l2_norm_star(n).value, base);
    }

    // Random functions never beat the explicit boundedness constant.
    RestartStream stream(options.seed, 0xB0B);
    for (std::size_t n : {3, 5}) {
        for (const Graph& g : {complete(n), star(n), path(n)}) {
            for (double pv : {0.5, 1.0, 2.0}) {
                for (double qv : {0.5, 1.0, 2.0}) {
                    for (double av : {0.0, 0.5}) {
                        const PExponent p(pv), q(qv);
                        const Alpha alpha(av);
                        const double bound = boundedness_constant(n, p, q, alpha);
                        double worst = 0.0;
                        for (int trial = 0; trial < 100; ++trial) {
                            std::vector<double> values(n);
                            for (double& x : values) x = 4.0 * stream.uniform() - 2.0;
                            const VertexFunction f(values);
                            const double excess = p_variation(g, centered_maximal(g, f, alpha), q) -
                                                  bound * p_variation(g, f, p);
                            worst = std::max(worst, excess);
                        }
                        report.check(entry("boundedness excess (q=" + q.to_string() +
                                               ", alpha=" + std::to_string(av).substr(0, 3) + ")",
                                           "", n, p, 0.0, worst, 1e-9));
                    }
                }
            }
        }
    }
}

void continuity_suite(Report& report, const VerifyOptions& options) {
    for (std::size_t n = 3; n <= 8; ++n) {
        const Graph g = star(n);
        const auto [f, shifted] = shift_counterexample(n);
        const double nd = double(n);
        std::vector<double> diff(n);
        for (std::size_t i = 0; i < n; ++i) diff[i] = f[i] - shifted[i];
        report.check(entry("shift counterexample Var_1(f - f_j)", "star", n, PExponent(1.0), 0.0,
                           p_variation(g, VertexFunction(diff), PExponent(1.0)), 0.0));
        const VertexFunction seq[] = {shifted};
        const double var = sequence_probe(g, f, seq, PExponent(1.0)).front();
        report.check(entry("shift counterexample Var_1(Mf - Mf_j)", "star", n, PExponent(1.0),
                           (nd - 1.0) * (1.0 / nd + 0.5), var, 1e-12));
        report.check(entry("shift counterexample floor deficit", "star", n, PExponent(1.0), 0.0,
                           std::max(0.0, 1.0 / nd + 0.5 - var), 1e-12));
    }

    const double scales[] = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    RestartStream stream(options.seed, 0xC0);
    for (Family family : {Family::complete, Family::star}) {
        const Graph g = make_family(family, 5);
        std::vector<double> values(5);
        for (double& x : values) x = stream.uniform();
        const auto rows =
            continuity_probe(g, VertexFunction(values), scales, PExponent(1.0), PExponent(1.0),
                             Alpha{}, options.seed);
        bool monotone = true;
        double bound_excess = 0.0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i > 0 && rows[i].variation_difference > rows[i - 1].variation_difference) {
                monotone = false;
            }
            if (rows[i].bound) {
                bound_excess =
                    std::max(bound_excess, rows[i].variation_difference - *rows[i].bound);
            }
        }
        const std::string fam(to_string(family));
        report.check(entry("continuity probe monotone", fam, 5, PExponent(1.0), 1.0,
                           monotone ? 1.0 : 0.0, 0.0));
        report.check(entry("continuity probe value at 1e-6 below 1e-4", fam, 5, PExponent(1.0), 0.0,
                           std::max(0.0, rows.back().variation_difference - 1e-4), 0.0));
        report.check(entry("continuity probe bound excess", fam, 5, PExponent(1.0), 0.0,
                           std::max(0.0, bound_excess), 1e-12));
        report.info(entry("continuity probe value at 1e-6", fam, 5, PExponent(1.0), std::nullopt,
                          rows.back().variation_difference, 0.0));
    }
}

}  // namespace

Report run_verify(Suite suite, const VerifyOptions& options) {
    Report report;
    report.metadata.tool_version = GRAPHMAX_VERSION;
    report.metadata.seed = options.seed;
    auto wants = [suite](Suite s) { return suite == Suite::all || suite == s; };
    if (wants(Suite::constants)) constants_suite(report);
    if (wants(Suite::extremizers)) extremizers_suite(report);
    if (wants(Suite::bounds)) bounds_suite(report, options);
    if (wants(Suite::continuity)) continuity_suite(report, options);
    return report;
}

}  // namespace graphmax
