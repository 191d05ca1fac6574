#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "graphmax/constants.hpp"
#include "graphmax/graph.hpp"
#include "graphmax/maxop.hpp"
#include "graphmax/variation.hpp"

namespace graphmax {

enum class Target { variation_ratio, norm_ratio };

std::string_view to_string(Target target);
/// Accepts "variation" / "variation_ratio" and "norm" / "norm_ratio" / "l2".
Target parse_target(std::string_view name);

inline constexpr std::uint64_t kDefaultSeed = 20200417;

struct SearchConfig {
    std::size_t restarts = 64;
    std::size_t max_iters = 2000;  // sweeps per restart
    std::uint64_t seed = kDefaultSeed;
    double step_init = 0.25;
    double step_min = 1e-7;
    Target target = Target::variation_ratio;
    PExponent p{2.0};
    Alpha alpha{};
    Centering centering = Centering::centered;
    /// Worker threads for restarts; 0 picks hardware concurrency. Capped by
    /// the GRAPHMAX_THREADS environment variable. Results do not depend on it.
    std::size_t threads = 0;

    /// Throws DomainError on restarts == 0 or step_min >= step_init.
    void validate() const;
};

struct TwoLevelProfile {
    std::size_t level_size = 0;
    double level_value = 0.0;  // gamma; the other vertices carry 1
    bool includes_center = false;
};

struct SearchReport {
    SearchConfig config;
    double best_ratio = 0.0;
    VertexFunction best_f;
    /// Best ratio per restart (two-level scans: per level-set placement).
    std::vector<double> per_restart_best;
    /// Sweeps per restart (two-level scans: objective evaluations per placement).
    std::vector<std::size_t> iterations_used;
    std::optional<ConstantResult> closed_form;
    /// closed_form value minus best_ratio, when a value exists.
    std::optional<double> gap;
    std::optional<TwoLevelProfile> two_level;
};

/// Ratio selected by the target: Var_p or l^p quotient of the maximal function.
double evaluate_ratio(const Graph& g, const VertexFunction& f, Target target, PExponent p,
                      Alpha alpha, Centering centering);

/// Recognizes K_n and S_n (n >= 2). S_2 is reported as complete.
std::optional<Family> detect_family(const Graph& g);

/// The tabulated constant for this graph and objective, if any: sharp
/// variation constants for classical centered M on K_n/S_n, and ||M||_2.
std::optional<ConstantResult> closed_form_for(const Graph& g, Target target, PExponent p,
                                              Alpha alpha, Centering centering);

/// Multi-start coordinate ascent over nonnegative f. Deterministic in cfg.seed;
/// identical for every thread count.
SearchReport estimate_ratio(const Graph& g, const SearchConfig& cfg);

/// Exhaustive search over two-valued functions (gamma on k vertices, 1 on
/// the rest) on K_n or S_n, with gamma optimized by grid plus golden section.
/// Throws DomainError when g is not a complete or star graph.
SearchReport two_level_scan(const Graph& g, Target target, PExponent p, Alpha alpha = {},
                            Centering centering = Centering::centered);

enum class ScanFlag {
    consistent,
    exceeds_proved,            // a bug: no function may beat a proved constant
    potential_counterexample,  // beats a conjectured value; reported, never asserted
};

std::string_view to_string(ScanFlag flag);

struct ScanRow {
    Family family;
    std::size_t n;
    PExponent p;
    SearchReport estimate;
    SearchReport two_level;
    ConstantResult constant;
    double best_ratio;
    /// best_ratio > 1 - 1/n + tolerance (the conjectured value for both families).
    bool exceeds_one_minus_inverse;
    ScanFlag flag;
};

inline constexpr double kScanTolerance = 1e-7;

/// Variation-ratio estimates over a grid of (n, p) compared with the table.
std::vector<ScanRow> conjecture_scan(Family family, std::span<const std::size_t> ns,
                                     std::span<const PExponent> ps, const SearchConfig& cfg);

struct ProbeRow {
    double epsilon;
    /// Var_q(M f - M f_eps).
    double variation_difference;
    /// Var_p(f - f_eps).
    double perturbation_variation;
    /// (n(n-1)/2)^(1/q) * 2n * n^max(1-1/p,0) * Var_p(f - f_eps); connected graphs only.
    std::optional<double> bound;
};

/// Perturbs f along one seeded random direction with one randomly chosen
/// coordinate set to zero (so min |f - f_eps| = 0) and tabulates the response.
std::vector<ProbeRow> continuity_probe(const Graph& g, const VertexFunction& f,
                                       std::span<const double> scales, PExponent p, PExponent q,
                                       Alpha alpha = {}, std::uint64_t seed = kDefaultSeed);

/// Var_q(M f - M f_j) for each f_j of an explicit sequence.
std::vector<double> sequence_probe(const Graph& g, const VertexFunction& f,
                                   std::span<const VertexFunction> sequence, PExponent q,
                                   Alpha alpha = {});

/// Deterministic stream for restart `index` of a search seeded with `seed`.
class RestartStream {
public:
    RestartStream(std::uint64_t seed, std::uint64_t index);
    /// Uniform on [0, 1), 53 random bits.
    double uniform();
    std::uint64_t next();

private:
    std::mt19937_64 engine_;
};

}  // namespace graphmax
