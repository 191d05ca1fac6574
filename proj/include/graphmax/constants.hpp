#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "graphmax/graph.hpp"
#include "graphmax/maxop.hpp"
#include "graphmax/variation.hpp"

namespace graphmax {

enum class Family { complete, star };

std::string_view to_string(Family family);
/// "complete" / "star"; throws DomainError otherwise.
Family parse_family(std::string_view name);
Graph make_family(Family family, std::size_t n);

enum class ProofStatus { proved, conjectured, unknown };

std::string_view to_string(ProofStatus status);

/// A closed-form constant with its standing in the literature. `value` is
/// present exactly when the status is proved or conjectured.
struct ConstantResult {
    std::optional<double> value;
    ProofStatus status = ProofStatus::unknown;
    std::string source;
    std::string note;
};

/// Sharp constant for Var_p(M f) <= C Var_p(f) on K_n (value 1 - 1/n).
ConstantResult sharp_variation_constant_complete(std::size_t n, PExponent p);

/// Sharp constant for Var_p(M f) <= C Var_p(f) on S_n.
ConstantResult sharp_variation_constant_star(std::size_t n, PExponent p);

ConstantResult sharp_variation_constant(Family family, std::size_t n, PExponent p);

/// ||M||_2 on K_n, maximized over level-set sizes k in {floor(n/3), ceil(n/3)}
/// clamped to [1, n-1].
ConstantResult l2_norm_complete(std::size_t n);

/// ||M||_2 on S_n: closed form for n >= 4, the known value for n = 2,
/// unknown for n = 3.
ConstantResult l2_norm_star(std::size_t n);

ConstantResult l2_norm(Family family, std::size_t n);

/// Level-set size attaining l2_norm_complete(n).
std::size_t l2_argmax_level_size(std::size_t n);

/// Explicit boundedness constant C(n,p,q) * n^alpha for
/// Var_q(M_alpha f) <= C Var_p(f) on any graph with n vertices:
/// (n(n-1)/2)^(1/q) * n^alpha * (n-1)^max(1 - 1/p, 0).
double boundedness_constant(std::size_t n, PExponent p, PExponent q, Alpha alpha);

VertexFunction extremizer_delta(const Graph& g, Vertex v);

/// (3, 3 + 2^(1/(p-1)), 2) on star(3); requires p > 1 finite.
VertexFunction extremizer_star_variation(PExponent p);

/// gamma on vertices 0..k-1 and 1 elsewhere, for the l2 norm on K_n.
VertexFunction extremizer_complete_l2(std::size_t n, std::size_t k);
double complete_l2_level(std::size_t n, std::size_t k);

/// gamma at the center of S_n and 1 on every leaf; requires n >= 4.
VertexFunction extremizer_star_l2(std::size_t n);
double star_l2_level(std::size_t n);

/// (1 + 2^p')^(1/p') / 3 with p' = p/(p-1); the S_3 constant for p > 1.
double star3_variation_value(PExponent p);

}  // namespace graphmax
