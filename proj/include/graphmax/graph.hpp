#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace graphmax {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Hop distance between vertices in different components.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Finite simple undirected graph with all-pairs hop distances.
///
/// Immutable after construction. Edges are stored canonically: every pair
/// has first < second, the list is sorted and duplicates are dropped, so two
/// graphs built from the same edge set in any order compare equal.
class Graph {
public:
    /// Throws GraphError on n == 0, an out-of-range id or a loop edge.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t size() const noexcept { return n_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Vertex> neighbors(Vertex v) const;

    /// Hop distance, or kUnreachable across components.
    int dist(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
    bool adjacent(Vertex u, Vertex v) const { return dist(u, v) == 1; }

    /// Largest finite distance from v (0 for an isolated vertex).
    int eccentricity(Vertex v) const { return ecc_[v]; }

    /// Vertices reachable from v ordered by (distance, id). The first
    /// ball_size(v, r) entries are exactly B(v, r).
    std::span<const Vertex> by_distance(Vertex v) const;
    std::size_t ball_size(Vertex v, int radius) const;

    bool connected() const noexcept;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> adj_offset_;
    std::vector<Vertex> adj_;
    std::vector<int> dist_;
    std::vector<int> ecc_;
    // order_[v*n .. v*n + reach_[v]) lists reachable vertices by distance.
    std::vector<Vertex> order_;
    std::vector<std::size_t> reach_;
    // shell_end_[v][r] = |B(v, r)| for r = 0..ecc(v).
    std::vector<std::vector<std::size_t>> shell_end_;
};

struct Ball {
    Vertex center;
    int radius;
    std::vector<Vertex> members;  // ascending ids

    std::size_t size() const noexcept { return members.size(); }
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);

Graph complete(std::size_t n);
/// Center is vertex 0.
Graph star(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);

Ball ball(const Graph& g, Vertex v, int radius);

/// Maximum finite distance over all vertex pairs.
int diameter(const Graph& g);

}  // namespace graphmax
