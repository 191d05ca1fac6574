#include "graphmax/constants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "graphmax/errors.hpp"

namespace graphmax {

std::string_view to_string(Family family) {
    return family == Family::complete ? "complete" : "star";
}

Family parse_family(std::string_view name) {
    if (name == "complete") return Family::complete;
    if (name == "star") return Family::star;
    throw DomainError("unknown graph family '" + std::string(name) + "'");
}

Graph make_family(Family family, std::size_t n) {
    return family == Family::complete ? complete(n) : star(n);
}

std::string_view to_string(ProofStatus status) {
    switch (status) {
        case ProofStatus::proved:
            return "proved";
        case ProofStatus::conjectured:
            return "conjectured";
        case ProofStatus::unknown:
            return "unknown";
    }
    return "unknown";
}

namespace {

void require_n(std::size_t n, std::size_t minimum) {
    if (n < minimum) throw DomainError("n must be at least " + std::to_string(minimum));
}

double one_minus_inverse(std::size_t n, PExponent) { return 1.0 - 1.0 / static_cast<double>(n); }

double star3_value(std::size_t, PExponent p) { return star3_variation_value(p); }

// The proof status of each sharp-constant claim lives in this table. Rules
// are tried in order and the first match wins; `value` is null for unknown.
struct Rule {
    bool (*applies)(std::size_t n, double p);
    ProofStatus status;
    double (*value)(std::size_t, PExponent);
    const char* source;
    const char* note;
};

const double kLog4OverLog6 = std::log(4.0) / std::log(6.0);

bool finite(double p) { return std::isfinite(p); }

const std::array kCompleteRules{
    Rule{[](std::size_t, double p) { return !finite(p); }, ProofStatus::conjectured,
         one_minus_inverse, "conjecture: C(K_n,p) = 1 - 1/n for every n >= 2 and p > 0",
         "the sharp bounds are proved for finite p only; p = inf is reported as conjectured"},
    Rule{[](std::size_t, double p) { return p > 1.0; }, ProofStatus::proved, one_minus_inverse,
         "complete graph sharp variation theorem, case p > 1", "delta at a vertex is an extremizer"},
    Rule{[](std::size_t n, double) { return n == 4; }, ProofStatus::proved, one_minus_inverse,
         "complete graph sharp variation theorem, case n = 4 and 0 < p <= 1",
         "delta at a vertex is an extremizer"},
    Rule{[](std::size_t n, double p) { return n >= 3 && p >= kLog4OverLog6; }, ProofStatus::proved,
         one_minus_inverse,
         "complete graph sharp variation theorem, case n >= 3 and log4/log6 <= p <= 1",
         "delta at a vertex is an extremizer"},
    Rule{[](std::size_t n, double) { return n == 3; }, ProofStatus::proved, one_minus_inverse,
         "earlier result for n = 3: the lower bound 1 - 1/n is attained", ""},
    Rule{[](std::size_t, double) { return true; }, ProofStatus::conjectured, one_minus_inverse,
         "conjecture: C(K_n,p) = 1 - 1/n for every n >= 2 and p > 0",
         "outside the proved ranges (p > 1, n = 4, or p >= log4/log6)"},
};

const std::array kStarRules{
    Rule{[](std::size_t, double p) { return p == 1.0; }, ProofStatus::proved, one_minus_inverse,
         "star graph sharp variation theorem, case p = 1", "delta at a leaf is an extremizer"},
    Rule{[](std::size_t n, double p) { return n == 2 && p > 1.0 && finite(p); },
         ProofStatus::proved, one_minus_inverse,
         "complete graph sharp variation theorem, case p > 1 (S_2 = K_2)", ""},
    Rule{[](std::size_t n, double p) { return n == 4 && p < 1.0; }, ProofStatus::proved,
         one_minus_inverse, "star graph sharp variation theorem, case n = 4 and 0 < p < 1",
         "delta at a leaf is an extremizer"},
    Rule{[](std::size_t n, double p) { return n >= 5 && p >= 0.5 && p <= 1.0; },
         ProofStatus::proved, one_minus_inverse,
         "star graph sharp variation theorem, case n >= 5 and 1/2 <= p <= 1",
         "delta at a leaf is an extremizer"},
    Rule{[](std::size_t n, double p) { return n == 3 && p > 1.0 && finite(p); }, ProofStatus::proved,
         star3_value, "star graph sharp variation theorem, case n = 3 and 1 < p < inf",
         "exceeds 1 - 1/n; attained by (3, 3 + 2^(1/(p-1)), 2)"},
    Rule{[](std::size_t n, double p) { return n == 5 && p < 0.5; }, ProofStatus::proved,
         one_minus_inverse, "star graph sharp variation result extended to n = 5 and every 0 < p < 1",
         "the key inequality extends to n = 5; the extension is stated without full details"},
    Rule{[](std::size_t n, double p) { return n >= 6 && p < 0.5; }, ProofStatus::conjectured,
         one_minus_inverse, "star graph sharp variation theorem, case 0 < p < 1/2 and n >= C(p)",
         "C(p) exists but is not given explicitly, so no finite n is certified"},
    Rule{[](std::size_t n, double p) { return n >= 4 && p > 1.0; }, ProofStatus::unknown, nullptr,
         "star graph, p > 1", "extremizers for n > 3 and p > 1 are not understood"},
    Rule{[](std::size_t n, double p) { return n == 3 && !finite(p); }, ProofStatus::unknown, nullptr,
         "star graph S_3", "the S_3 formula is proved for finite p > 1 only"},
    Rule{[](std::size_t, double) { return true; }, ProofStatus::conjectured, one_minus_inverse,
         "conjecture: C(S_n,p) = 1 - 1/n for every n >= 2 and 0 < p <= 1",
         "outside the proved ranges"},
};

template <std::size_t N>
ConstantResult lookup(const std::array<Rule, N>& rules, std::size_t n, PExponent p) {
    for (const Rule& rule : rules) {
        if (!rule.applies(n, p.value())) continue;
        ConstantResult result;
        result.status = rule.status;
        if (rule.value != nullptr) result.value = rule.value(n, p);
        result.source = rule.source;
        result.note = rule.note;
        return result;
    }
    return {};
}

double complete_l2_value(std::size_t n, std::size_t k) {
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    return std::sqrt(1.0 - kd / (2.0 * nd) + std::sqrt(4.0 * kd * nd - 3.0 * kd * kd) / (2.0 * nd));
}

}  // namespace

ConstantResult sharp_variation_constant_complete(std::size_t n, PExponent p) {
    require_n(n, 2);
    return lookup(kCompleteRules, n, p);
}

ConstantResult sharp_variation_constant_star(std::size_t n, PExponent p) {
    require_n(n, 2);
    return lookup(kStarRules, n, p);
}

ConstantResult sharp_variation_constant(Family family, std::size_t n, PExponent p) {
    return family == Family::complete ? sharp_variation_constant_complete(n, p)
                                      : sharp_variation_constant_star(n, p);
}

std::size_t l2_argmax_level_size(std::size_t n) {
    require_n(n, 2);
    std::size_t best_k = 0;
    double best = -1.0;
    for (std::size_t k : {n / 3, (n + 2) / 3}) {
        k = std::clamp<std::size_t>(k, 1, n - 1);
        double value = complete_l2_value(n, k);
        if (value > best) {
            best = value;
            best_k = k;
        }
    }
    return best_k;
}

ConstantResult l2_norm_complete(std::size_t n) {
    require_n(n, 2);
    ConstantResult result;
    result.value = complete_l2_value(n, l2_argmax_level_size(n));
    result.status = ProofStatus::proved;
    result.source = "l2 norm of the maximal operator on K_n";
    result.note = n % 3 == 0 ? "equals sqrt(4/3) whenever 3 divides n"
                             : "maximum over level-set sizes floor(n/3), ceil(n/3)";
    return result;
}

ConstantResult l2_norm_star(std::size_t n) {
    require_n(n, 2);
    ConstantResult result;
    if (n == 3) {
        result.status = ProofStatus::unknown;
        result.source = "l2 norm of the maximal operator on S_n";
        result.note = "the closed form is proved for n >= 4 only";
        return result;
    }
    const double nd = static_cast<double>(n);
    result.status = ProofStatus::proved;
    if (n == 2) {
        result.value = std::sqrt(3.0 + std::sqrt(5.0)) / 2.0;
        result.source = "known value for n = 2 (S_2 = K_2)";
        result.note = "agrees with the n >= 4 closed form evaluated at n = 2";
    } else {
        result.value = std::sqrt(1.0 + (nd - 4.0) / 8.0 + std::sqrt(nd * nd + 8.0 * nd) / 8.0);
        result.source = "l2 norm of the maximal operator on S_n, n >= 4";
        result.note = "attained by gamma at the center and 1 on the leaves";
    }
    return result;
}

ConstantResult l2_norm(Family family, std::size_t n) {
    return family == Family::complete ? l2_norm_complete(n) : l2_norm_star(n);
}

double boundedness_constant(std::size_t n, PExponent p, PExponent q, Alpha alpha) {
    require_n(n, 2);
    if (alpha.value() >= 1.0) throw DomainError("boundedness constant needs alpha < 1");
    const double nd = static_cast<double>(n);
    const double edge_factor = q.is_infinite() ? 1.0 : std::pow(nd * (nd - 1.0) / 2.0, 1.0 / q.value());
    const double holder_exponent = p.is_infinite() ? 1.0 : std::max(1.0 - 1.0 / p.value(), 0.0);
    return edge_factor * std::pow(nd, alpha.value()) * std::pow(nd - 1.0, holder_exponent);
}

VertexFunction extremizer_delta(const Graph& g, Vertex v) {
    return VertexFunction::indicator(g.size(), v);
}

double star3_variation_value(PExponent p) {
    if (p.is_infinite() || !(p.value() > 1.0)) throw DomainError("S_3 formula needs 1 < p < inf");
    const double dual = p.value() / (p.value() - 1.0);
    return std::pow(1.0 + std::pow(2.0, dual), 1.0 / dual) / 3.0;
}

VertexFunction extremizer_star_variation(PExponent p) {
    if (p.is_infinite() || !(p.value() > 1.0)) throw DomainError("S_3 extremizer needs 1 < p < inf");
    return VertexFunction({3.0, 3.0 + std::pow(2.0, 1.0 / (p.value() - 1.0)), 2.0});
}

double complete_l2_level(std::size_t n, std::size_t k) {
    if (k < 1 || k + 1 > n) throw DomainError("level-set size must lie in [1, n-1]");
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    const double root = std::sqrt(4.0 * kd * nd * nd * nd - 3.0 * nd * nd * kd * kd);
    return 2.0 * (nd - kd) * (nd - kd) / (root - (3.0 * nd * kd - 2.0 * kd * kd));
}

VertexFunction extremizer_complete_l2(std::size_t n, std::size_t k) {
    const double gamma = complete_l2_level(n, k);
    std::vector<double> values(n, 1.0);
    std::fill_n(values.begin(), k, gamma);
    return VertexFunction(std::move(values));
}

double star_l2_level(std::size_t n) {
    require_n(n, 4);
    const double nd = static_cast<double>(n);
    return 2.0 * (nd - 1.0) / (std::sqrt(nd * nd + 8.0 * nd) - (nd + 2.0));
}

VertexFunction extremizer_star_l2(std::size_t n) {
    std::vector<double> values(n, 1.0);
    values[0] = star_l2_level(n);
    return VertexFunction(std::move(values));
}

}  // namespace graphmax
