#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "graphmax/graph.hpp"

namespace graphmax {

/// Real values on the vertices of a graph. Every entry is finite.
class VertexFunction {
public:
    VertexFunction() = default;
    /// Throws DomainError on a NaN or infinite entry.
    explicit VertexFunction(std::vector<double> values);

    static VertexFunction constant(std::size_t n, double c);
    static VertexFunction indicator(std::size_t n, Vertex v);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }

    friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

private:
    std::vector<double> values_;
};

/// Fractional order of the maximal operator, 0 <= alpha <= 1. Zero is the
/// classical Hardy-Littlewood operator.
class Alpha {
public:
    constexpr Alpha() = default;
    explicit Alpha(double value);

    constexpr double value() const noexcept { return value_; }
    constexpr bool classical() const noexcept { return value_ == 0.0; }

private:
    double value_ = 0.0;
};

enum class Centering { centered, uncentered };

/// M_alpha f(e) = max over radii r of |B(e,r)|^(alpha-1) * sum_{m in B(e,r)} |f(m)|.
/// Radii run over 0..eccentricity(e); larger balls repeat the last one.
VertexFunction centered_maximal(const Graph& g, const VertexFunction& f, Alpha alpha = {});

/// Same normalized ball sums, maximized over every ball B(v,r) that contains e.
VertexFunction uncentered_maximal(const Graph& g, const VertexFunction& f, Alpha alpha = {});

VertexFunction maximal(const Graph& g, const VertexFunction& f, Alpha alpha, Centering centering);

/// Centered values together with the smallest radius attaining each maximum.
struct MaximalTrace {
    VertexFunction values;
    std::vector<int> radius;
};
MaximalTrace centered_maximal_trace(const Graph& g, const VertexFunction& f, Alpha alpha = {});

/// The pair used to show that BV-continuity needs the min|f - f_j| -> 0
/// hypothesis: on star(n), f = (2,1,...,1) and f_shifted = f - 3.
std::pair<VertexFunction, VertexFunction> shift_counterexample(std::size_t n);

}  // namespace graphmax
