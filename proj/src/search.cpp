#include "graphmax/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "graphmax/errors.hpp"

namespace graphmax {

std::string_view to_string(Target target) {
    return target == Target::variation_ratio ? "variation" : "norm";
}

Target parse_target(std::string_view name) {
    if (name == "variation" || name == "variation_ratio" || name == "var") {
        return Target::variation_ratio;
    }
    if (name == "norm" || name == "norm_ratio" || name == "l2") return Target::norm_ratio;
    throw DomainError("unknown target '" + std::string(name) + "'");
}

std::string_view to_string(ScanFlag flag) {
    switch (flag) {
        case ScanFlag::consistent:
            return "consistent";
        case ScanFlag::exceeds_proved:
            return "exceeds_proved";
        case ScanFlag::potential_counterexample:
            return "potential_counterexample";
    }
    return "consistent";
}

void SearchConfig::validate() const {
    if (restarts == 0) throw DomainError("search needs at least one restart");
    if (!(step_min < step_init) || !(step_min > 0.0)) {
        throw DomainError("search needs 0 < step_min < step_init");
    }
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

RestartStream::RestartStream(std::uint64_t seed, std::uint64_t index)
    : engine_(splitmix64(seed ^ splitmix64(index))) {}

std::uint64_t RestartStream::next() { return engine_(); }

double RestartStream::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double evaluate_ratio(const Graph& g, const VertexFunction& f, Target target, PExponent p,
                      Alpha alpha, Centering centering) {
    return target == Target::variation_ratio ? variation_ratio(g, f, p, alpha, centering).ratio
                                             : norm_ratio(g, f, p, alpha, centering).ratio;
}

std::optional<Family> detect_family(const Graph& g) {
    const std::size_t n = g.size();
    if (n < 2) return std::nullopt;
    if (g.edge_count() == n * (n - 1) / 2) return Family::complete;
    if (g.edge_count() == n - 1) {
        bool all_at_zero = std::all_of(g.edges().begin(), g.edges().end(),
                                       [](const Edge& e) { return e.first == 0; });
        if (all_at_zero) return Family::star;
    }
    return std::nullopt;
}

std::optional<ConstantResult> closed_form_for(const Graph& g, Target target, PExponent p,
                                              Alpha alpha, Centering centering) {
    auto family = detect_family(g);
    if (!family || !alpha.classical() || centering != Centering::centered) return std::nullopt;
    if (target == Target::variation_ratio) return sharp_variation_constant(*family, g.size(), p);
    if (p.value() == 2.0) return l2_norm(*family, g.size());
    return std::nullopt;
}

namespace {

std::size_t worker_count(std::size_t requested, std::size_t jobs) {
    std::size_t threads = requested != 0 ? requested : std::thread::hardware_concurrency();
    if (const char* cap = std::getenv("GRAPHMAX_THREADS")) {
        char* end = nullptr;
        unsigned long value = std::strtoul(cap, &end, 10);
        if (end != cap && value > 0) threads = std::min<std::size_t>(threads, value);
    }
    return std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(jobs, 1));
}

// Runs body(i) for i in [0, jobs) on a small pool. body must only write to
// slot i of its outputs.
template <class Body>
void parallel_for(std::size_t jobs, std::size_t threads, Body&& body) {
    if (threads <= 1) {
        for (std::size_t i = 0; i < jobs; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < jobs; i = next++) body(i);
        });
    }
}

class Objective {
public:
    Objective(const Graph& g, const SearchConfig& cfg) : g_(g), cfg_(cfg) {}

    // -inf when the ratio is undefined (constant or zero function).
    double operator()(const std::vector<double>& values) const {
        try {
            return evaluate_ratio(g_, VertexFunction(values), cfg_.target, cfg_.p, cfg_.alpha,
                                  cfg_.centering);
        } catch (const ZeroVariation&) {
            return -std::numeric_limits<double>::infinity();
        }
    }

    // Rescales to unit Var_p (variation) or unit l^p norm.
    void normalize(std::vector<double>& values) const {
        VertexFunction f(values);
        double scale = cfg_.target == Target::variation_ratio ? p_variation(g_, f, cfg_.p)
                                                              : lp_norm(f, cfg_.p);
        if (scale > 0.0 && std::isfinite(scale)) {
            for (double& x : values) x /= scale;
        }
    }

private:
    const Graph& g_;
    const SearchConfig& cfg_;
};

struct RestartResult {
    std::vector<double> best_f;
    double best_ratio = -std::numeric_limits<double>::infinity();
    std::size_t sweeps = 0;
};

// Restarts cycle through three start shapes: uniform, log-uniform (a few
// large values over a small floor) and sparse plateaus (two-valued plus
// jitter). Near-constant uniform starts alone tend to settle into the
// basin of one level-set size.
void draw_start(std::vector<double>& f, RestartStream& stream, std::size_t index) {
    switch (index % 3) {
        case 0:
            for (double& x : f) x = stream.uniform();
            break;
        case 1:
            for (double& x : f) x = std::exp(-6.0 * stream.uniform());
            break;
        default: {
            const double density = 0.1 + 0.5 * stream.uniform();
            for (double& x : f) x = (stream.uniform() < density ? 1.0 : 0.25) + 0.05 * stream.uniform();
            break;
        }
    }
}

RestartResult run_restart(const Graph& g, const SearchConfig& cfg, std::size_t index) {
    const std::size_t n = g.size();
    const Objective objective(g, cfg);
    RestartStream stream(cfg.seed, index);

    std::vector<double> f(n);
    double value = -std::numeric_limits<double>::infinity();
    for (int attempt = 0; attempt < 64 && !std::isfinite(value); ++attempt) {
        draw_start(f, stream, index);
        if (cfg.target == Target::variation_ratio) {
            double low = *std::min_element(f.begin(), f.end());
            for (double& x : f) x -= low;
        }
        objective.normalize(f);
        value = objective(f);
    }
    if (!std::isfinite(value)) return {f, value, 0};

    // For the classical variation ratio, f -> f + c leaves the ratio
    // unchanged; holding the minimum vertex at zero removes that direction.
    std::optional<std::size_t> pinned;
    if (cfg.target == Target::variation_ratio && cfg.alpha.classical()) {
        pinned = static_cast<std::size_t>(std::min_element(f.begin(), f.end()) - f.begin());
    }

    double step = cfg.step_init;
    std::size_t sweeps = 0;
    while (step >= cfg.step_min && sweeps < cfg.max_iters) {
        bool improved = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (pinned && *pinned == i) continue;
            const double current = f[i];
            for (double direction : {1.0, -1.0}) {
                const double trial = std::max(0.0, current + direction * step);
                if (trial == current) continue;
                f[i] = trial;
                const double candidate = objective(f);
                if (candidate > value) {
                    value = candidate;
                    improved = true;
                    break;
                }
                f[i] = current;
            }
        }
        ++sweeps;
        if (improved) {
            objective.normalize(f);
            value = objective(f);
        } else {
            step *= 0.5;
        }
    }
    return {std::move(f), value, sweeps};
}

void attach_closed_form(SearchReport& report, const Graph& g) {
    const auto& cfg = report.config;
    report.closed_form = closed_form_for(g, cfg.target, cfg.p, cfg.alpha, cfg.centering);
    if (report.closed_form && report.closed_form->value) {
        report.gap = *report.closed_form->value - report.best_ratio;
    }
}

}  // namespace

SearchReport estimate_ratio(const Graph& g, const SearchConfig& cfg) {
    cfg.validate();
    if (cfg.target == Target::variation_ratio && g.edge_count() == 0) {
        throw DomainError("variation search needs a graph with at least one edge");
    }

    std::vector<RestartResult> results(cfg.restarts);
    parallel_for(cfg.restarts, worker_count(cfg.threads, cfg.restarts),
                 [&](std::size_t i) { results[i] = run_restart(g, cfg, i); });

    SearchReport report;
    report.config = cfg;
    std::size_t best = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        report.per_restart_best.push_back(results[i].best_ratio);
        report.iterations_used.push_back(results[i].sweeps);
        if (results[i].best_ratio > results[best].best_ratio) best = i;
    }
    if (!std::isfinite(results[best].best_ratio)) {
        throw ZeroVariation("every restart drew a function with an undefined ratio");
    }
    report.best_f = VertexFunction(results[best].best_f);
    report.best_ratio =
        evaluate_ratio(g, report.best_f, cfg.target, cfg.p, cfg.alpha, cfg.centering);
    attach_closed_form(report, g);
    return report;
}

namespace {

constexpr double kGoldenRatio = 0.6180339887498949;

struct LineMaximum {
    double argument;
    double value;
    std::size_t evaluations;
};

// Maximizes h over [lo, hi]: uniform grid, then golden section on the
// bracket around the best grid point.
template <class Fn>
LineMaximum maximize_on_line(Fn&& h, double lo, double hi, std::size_t grid_points) {
    std::size_t evaluations = 0;
    auto eval = [&](double u) {
        ++evaluations;
        return h(u);
    };
    const double spacing = (hi - lo) / static_cast<double>(grid_points - 1);
    std::size_t best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid_points; ++i) {
        double v = eval(lo + spacing * static_cast<double>(i));
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    double a = lo + spacing * static_cast<double>(best == 0 ? 0 : best - 1);
    double b = lo + spacing * static_cast<double>(std::min(best + 1, grid_points - 1));
    double c = b - kGoldenRatio * (b - a);
    double d = a + kGoldenRatio * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    while (b - a > 1e-12 * std::max(1.0, std::fabs(a) + std::fabs(b))) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGoldenRatio * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGoldenRatio * (b - a);
            fd = eval(d);
        }
    }
    LineMaximum result{lo + spacing * static_cast<double>(best), best_value, evaluations};
    for (auto [u, v] : {std::pair{c, fc}, std::pair{d, fd}}) {
        if (v > result.value) result = {u, v, evaluations};
    }
    result.evaluations = evaluations;
    return result;
}

}  // namespace

SearchReport two_level_scan(const Graph& g, Target target, PExponent p, Alpha alpha,
                            Centering centering) {
    const auto family = detect_family(g);
    if (!family) throw DomainError("two-level scan needs a complete or star graph");
    const std::size_t n = g.size();

    struct Placement {
        std::vector<bool> high;
        std::size_t size;
        bool includes_center;
    };
    std::vector<Placement> placements;
    for (std::size_t k = 1; k < n; ++k) {
        // On K_n every k-subset is equivalent; on S_n only whether the center
        // is in the high set matters.
        std::vector<bool> first_k(n, false);
        std::fill_n(first_k.begin(), k, true);
        placements.push_back({first_k, k, true});
        if (*family == Family::star && n > 2) {
            std::vector<bool> leaves(n, false);
            std::fill_n(leaves.begin() + 1, k, true);
            placements.push_back({leaves, k, false});
        }
    }

    SearchReport report;
    report.config.target = target;
    report.config.p = p;
    report.config.alpha = alpha;
    report.config.centering = centering;
    report.config.restarts = placements.size();

    // gamma = 1 + exp(u), u on [log 1e-4, log 1e4].
    const double lo = std::log(1e-4);
    const double hi = std::log(1e4);
    double best_value = -std::numeric_limits<double>::infinity();
    for (const auto& placement : placements) {
        auto make = [&](double u) {
            const double gamma = 1.0 + std::exp(u);
            std::vector<double> values(n);
            for (std::size_t v = 0; v < n; ++v) values[v] = placement.high[v] ? gamma : 1.0;
            return VertexFunction(std::move(values));
        };
        auto h = [&](double u) { return evaluate_ratio(g, make(u), target, p, alpha, centering); };
        LineMaximum line = maximize_on_line(h, lo, hi, 161);
        report.per_restart_best.push_back(line.value);
        report.iterations_used.push_back(line.evaluations);
        if (line.value > best_value) {
            best_value = line.value;
            report.best_f = make(line.argument);
            report.two_level =
                TwoLevelProfile{placement.size, 1.0 + std::exp(line.argument), placement.includes_center};
        }
    }
    report.best_ratio = evaluate_ratio(g, report.best_f, target, p, alpha, centering);
    attach_closed_form(report, g);
    return report;
}

std::vector<ScanRow> conjecture_scan(Family family, std::span<const std::size_t> ns,
                                     std::span<const PExponent> ps, const SearchConfig& cfg) {
    if (ns.empty() || ps.empty()) throw DomainError("conjecture scan needs nonempty ranges");
    std::vector<ScanRow> rows;
    for (std::size_t n : ns) {
        const Graph g = make_family(family, n);
        for (PExponent p : ps) {
            SearchConfig local = cfg;
            local.target = Target::variation_ratio;
            local.p = p;
            local.alpha = Alpha{};
            local.centering = Centering::centered;
            SearchReport estimate = estimate_ratio(g, local);
            SearchReport structured = two_level_scan(g, Target::variation_ratio, p);
            ConstantResult constant = sharp_variation_constant(family, n, p);
            const double best = std::max(estimate.best_ratio, structured.best_ratio);
            const double conjectured = 1.0 - 1.0 / static_cast<double>(n);

            ScanFlag flag = ScanFlag::consistent;
            if (constant.value && best > *constant.value + kScanTolerance) {
                flag = constant.status == ProofStatus::proved ? ScanFlag::exceeds_proved
                                                              : ScanFlag::potential_counterexample;
            }
            rows.push_back(ScanRow{family, n, p, std::move(estimate), std::move(structured),
                                   std::move(constant), best, best > conjectured + kScanTolerance,
                                   flag});
        }
    }
    return rows;
}

namespace {

VertexFunction difference(const VertexFunction& a, const VertexFunction& b) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return VertexFunction(std::move(out));
}

}  // namespace

std::vector<ProbeRow> continuity_probe(const Graph& g, const VertexFunction& f,
                                       std::span<const double> scales, PExponent p, PExponent q,
                                       Alpha alpha, std::uint64_t seed) {
    if (f.size() != g.size()) throw LengthMismatch("vertex function length does not match graph");
    const std::size_t n = g.size();
    RestartStream stream(seed, 0);
    std::vector<double> direction(n);
    for (double& x : direction) x = 2.0 * stream.uniform() - 1.0;
    direction[stream.next() % n] = 0.0;

    const VertexFunction base = centered_maximal(g, f, alpha);
    const double nd = static_cast<double>(n);
    const double edge_factor =
        q.is_infinite() ? 1.0 : std::pow(nd * (nd - 1.0) / 2.0, 1.0 / q.value());
    const double holder = p.is_infinite() ? 1.0 : std::max(1.0 - 1.0 / p.value(), 0.0);

    std::vector<ProbeRow> rows;
    for (double eps : scales) {
        std::vector<double> moved(n);
        for (std::size_t i = 0; i < n; ++i) moved[i] = f[i] + eps * direction[i];
        const VertexFunction fj(std::move(moved));
        ProbeRow row;
        row.epsilon = eps;
        row.variation_difference =
            p_variation(g, difference(base, centered_maximal(g, fj, alpha)), q);
        row.perturbation_variation = p_variation(g, difference(f, fj), p);
        if (g.connected()) {
            row.bound = edge_factor * 2.0 * nd * std::pow(nd, holder) * row.perturbation_variation;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<double> sequence_probe(const Graph& g, const VertexFunction& f,
                                   std::span<const VertexFunction> sequence, PExponent q,
                                   Alpha alpha) {
    const VertexFunction base = centered_maximal(g, f, alpha);
    std::vector<double> out;
    out.reserve(sequence.size());
    for (const auto& fj : sequence) {
        out.push_back(p_variation(g, difference(base, centered_maximal(g, fj, alpha)), q));
    }
    return out;
}

}  // namespace graphmax
