#include "graphmax/variation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "graphmax/errors.hpp"

namespace graphmax {

PExponent::PExponent(double p) : p_(p) {
    if (!(p > 0.0)) throw DomainError("exponent p must be positive");
}

PExponent PExponent::infinity() { return PExponent(std::numeric_limits<double>::infinity()); }

bool PExponent::is_infinite() const noexcept { return std::isinf(p_); }

PExponent PExponent::parse(const std::string& text) {
    std::string lower;
    for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "inf" || lower == "infinity" || lower == "+inf") return infinity();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw DomainError("cannot parse exponent '" + text + "'");
    }
    return PExponent(value);
}

std::string PExponent::to_string() const {
    if (is_infinite()) return "inf";
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p_);
    return std::string(buf, ptr);
}

namespace {

void check_length(const Graph& g, const VertexFunction& f) {
    if (f.size() != g.size()) throw LengthMismatch("vertex function length does not match graph");
}

double power_sum_root(double sum, double p) { return std::pow(sum, 1.0 / p); }

}  // namespace

double p_variation(const Graph& g, const VertexFunction& f, PExponent p) {
    check_length(g, f);
    if (p.is_infinite()) {
        double worst = 0.0;
        for (auto [u, v] : g.edges()) worst = std::max(worst, std::fabs(f[u] - f[v]));
        return worst;
    }
    double sum = 0.0;
    for (auto [u, v] : g.edges()) sum += std::pow(std::fabs(f[u] - f[v]), p.value());
    return power_sum_root(sum, p.value());
}

double lp_norm(const VertexFunction& f, PExponent p) {
    if (p.is_infinite()) {
        double worst = 0.0;
        for (double x : f.values()) worst = std::max(worst, std::fabs(x));
        return worst;
    }
    double sum = 0.0;
    for (double x : f.values()) sum += std::pow(std::fabs(x), p.value());
    return power_sum_root(sum, p.value());
}

double bv_norm(const Graph& g, const VertexFunction& f, PExponent p, Vertex anchor) {
    if (anchor >= g.size()) throw GraphError("anchor vertex out of range");
    return p_variation(g, f, p) + std::fabs(f[anchor]);
}

RatioResult variation_ratio(const Graph& g, const VertexFunction& f, PExponent p, Alpha alpha,
                            Centering centering) {
    const double denominator = p_variation(g, f, p);
    if (denominator == 0.0) throw ZeroVariation("Var_p f is zero: f is constant on every component");
    const double numerator = p_variation(g, maximal(g, f, alpha, centering), p);
    return {numerator, denominator, numerator / denominator};
}

RatioResult norm_ratio(const Graph& g, const VertexFunction& f, PExponent p, Alpha alpha,
                       Centering centering) {
    check_length(g, f);
    const double denominator = lp_norm(f, p);
    if (denominator == 0.0) throw ZeroVariation("||f||_p is zero");
    const double numerator = lp_norm(maximal(g, f, alpha, centering), p);
    return {numerator, denominator, numerator / denominator};
}

namespace {

void check_pair(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw LengthMismatch("majorization inputs differ in length");
    auto nonincreasing = [](std::span<const double> v) {
        return std::is_sorted(v.begin(), v.end(), std::greater<>());
    };
    if (!nonincreasing(x) || !nonincreasing(y)) {
        throw UnsortedInput("majorization inputs must be sorted nonincreasing");
    }
}

}  // namespace

bool majorizes(std::span<const double> x, std::span<const double> y, double tol) {
    check_pair(x, y);
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sx += x[k];
        sy += y[k];
        if (sx < sy - tol) return false;
    }
    return std::fabs(sx - sy) <= tol;
}

double ConvexFunction::operator()(double t) const {
    switch (kind) {
        case Kind::negative_power:
            return -std::pow(t, p);
        case Kind::exponential:
            return std::exp(p * t);
    }
    return 0.0;
}

bool karamata_holds(std::span<const double> x, std::span<const double> y, ConvexFunction phi,
                    double tol) {
    check_pair(x, y);
    if (phi.kind == ConvexFunction::Kind::negative_power) {
        if (!(phi.p > 0.0 && phi.p <= 1.0)) throw DomainError("-t^p is convex only for p in (0,1]");
        if (!x.empty() && (x.back() < 0.0 || y.back() < 0.0)) {
            throw DomainError("-t^p needs nonnegative arguments");
        }
    } else if (!(phi.p > 0.0)) {
        throw DomainError("exp(p t) needs p > 0");
    }
    double lhs = 0.0;
    double rhs = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        lhs += phi(x[k]);
        rhs += phi(y[k]);
    }
    return lhs >= rhs - tol;
}

}  // namespace graphmax
