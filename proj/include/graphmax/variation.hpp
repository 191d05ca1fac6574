#pragma once

#include <span>
#include <string>

#include "graphmax/graph.hpp"
#include "graphmax/maxop.hpp"

namespace graphmax {

/// Exponent p in (0, inf]. The infinite exponent means max-over-edges.
class PExponent {
public:
    /// Throws DomainError unless p > 0 (NaN rejected, +inf accepted).
    explicit PExponent(double p);
    static PExponent infinity();

    double value() const noexcept { return p_; }
    bool is_infinite() const noexcept;

    /// Accepts decimal numbers and "inf"/"infinity".
    static PExponent parse(const std::string& text);
    std::string to_string() const;

    friend bool operator==(PExponent, PExponent) = default;

private:
    double p_;
};

/// (sum over edges |f(u) - f(v)|^p)^(1/p); for p = inf the largest edge jump.
/// Zero on an edgeless graph.
double p_variation(const Graph& g, const VertexFunction& f, PExponent p);

/// (sum |f(e)|^p)^(1/p), or max |f(e)| for p = inf.
double lp_norm(const VertexFunction& f, PExponent p);

/// Var_p(f) + |f(anchor)|, the norm that makes BV_p a normed space.
double bv_norm(const Graph& g, const VertexFunction& f, PExponent p, Vertex anchor);

struct RatioResult {
    double numerator = 0.0;
    double denominator = 0.0;
    double ratio = 0.0;
};

/// Var_p(M f) / Var_p(f). Throws ZeroVariation when Var_p(f) == 0.
RatioResult variation_ratio(const Graph& g, const VertexFunction& f, PExponent p, Alpha alpha = {},
                            Centering centering = Centering::centered);

/// ||M f||_p / ||f||_p. Throws ZeroVariation when f == 0.
RatioResult norm_ratio(const Graph& g, const VertexFunction& f, PExponent p, Alpha alpha = {},
                       Centering centering = Centering::centered);

inline constexpr double kDefaultTolerance = 1e-9;

/// Whether x majorizes y: both sorted nonincreasing, every prefix sum of x at
/// least the matching prefix sum of y, and equal totals (within tol).
/// Throws LengthMismatch or UnsortedInput.
bool majorizes(std::span<const double> x, std::span<const double> y,
               double tol = kDefaultTolerance);

/// Convex test functions for Karamata's inequality.
struct ConvexFunction {
    enum class Kind {
        negative_power,  // t -> -t^p, p in (0,1], t >= 0
        exponential,     // t -> exp(p t), p > 0
    };
    Kind kind;
    double p;

    double operator()(double t) const;
};

/// sum phi(x_i) >= sum phi(y_i) - tol. Inputs are validated as for majorizes.
bool karamata_holds(std::span<const double> x, std::span<const double> y, ConvexFunction phi,
                    double tol = kDefaultTolerance);

}  // namespace graphmax
