#include "graphmax/maxop.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphmax/errors.hpp"

namespace graphmax {

VertexFunction::VertexFunction(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw DomainError("vertex function value at " + std::to_string(i) + " is not finite");
        }
    }
}

VertexFunction VertexFunction::constant(std::size_t n, double c) {
    return VertexFunction(std::vector<double>(n, c));
}

VertexFunction VertexFunction::indicator(std::size_t n, Vertex v) {
    if (v >= n) throw GraphError("indicator vertex " + std::to_string(v) + " out of range");
    std::vector<double> values(n, 0.0);
    values[v] = 1.0;
    return VertexFunction(std::move(values));
}

Alpha::Alpha(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) throw DomainError("alpha must lie in [0, 1]");
}

namespace {

void check_length(const Graph& g, const VertexFunction& f) {
    if (f.size() != g.size()) {
        throw LengthMismatch("vertex function has " + std::to_string(f.size()) +
                             " values but the graph has " + std::to_string(g.size()) + " vertices");
    }
}

// |B|^(alpha-1) * sum. A singleton ball is left unscaled for every alpha.
double normalized(double sum, std::size_t ball_size, Alpha alpha) {
    if (ball_size == 1) return sum;
    if (alpha.classical()) return sum / static_cast<double>(ball_size);
    return sum * std::exp((alpha.value() - 1.0) * std::log(static_cast<double>(ball_size)));
}

// Visits every ball around `center` with its normalized |f| sum. Ball sums
// grow shell by shell along the graph's fixed (distance, id) order.
template <class Visit>
void for_each_ball(const Graph& g, std::span<const double> abs_f, Vertex center, Alpha alpha,
                   Visit&& visit) {
    auto order = g.by_distance(center);
    double sum = 0.0;
    std::size_t k = 0;
    for (int r = 0; r <= g.eccentricity(center); ++r) {
        std::size_t end = g.ball_size(center, r);
        for (; k < end; ++k) sum += abs_f[order[k]];
        visit(r, end, normalized(sum, end, alpha));
    }
}

std::vector<double> absolute(const VertexFunction& f) {
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::fabs(f[i]);
    return out;
}

}  // namespace

MaximalTrace centered_maximal_trace(const Graph& g, const VertexFunction& f, Alpha alpha) {
    check_length(g, f);
    const auto abs_f = absolute(f);
    std::vector<double> out(g.size());
    std::vector<int> radius(g.size(), 0);
    for (Vertex e = 0; e < g.size(); ++e) {
        double best = -1.0;
        for_each_ball(g, abs_f, e, alpha, [&](int r, std::size_t, double value) {
            if (value > best) {
                best = value;
                radius[e] = r;
            }
        });
        out[e] = best;
    }
    return {VertexFunction(std::move(out)), std::move(radius)};
}

VertexFunction centered_maximal(const Graph& g, const VertexFunction& f, Alpha alpha) {
    return centered_maximal_trace(g, f, alpha).values;
}

VertexFunction uncentered_maximal(const Graph& g, const VertexFunction& f, Alpha alpha) {
    check_length(g, f);
    const auto abs_f = absolute(f);
    std::vector<double> out(g.size(), 0.0);
    for (Vertex v = 0; v < g.size(); ++v) {
        auto order = g.by_distance(v);
        for_each_ball(g, abs_f, v, alpha, [&](int, std::size_t end, double value) {
            for (std::size_t k = 0; k < end; ++k) out[order[k]] = std::max(out[order[k]], value);
        });
    }
    return VertexFunction(std::move(out));
}

VertexFunction maximal(const Graph& g, const VertexFunction& f, Alpha alpha, Centering centering) {
    return centering == Centering::centered ? centered_maximal(g, f, alpha)
                                            : uncentered_maximal(g, f, alpha);
}

std::pair<VertexFunction, VertexFunction> shift_counterexample(std::size_t n) {
    if (n < 2) throw GraphError("shift counterexample needs n >= 2");
    std::vector<double> f(n, 1.0);
    f[0] = 2.0;
    std::vector<double> shifted(f);
    for (double& x : shifted) x -= 3.0;
    return {VertexFunction(std::move(f)), VertexFunction(std::move(shifted))};
}

}  // namespace graphmax
