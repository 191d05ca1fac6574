#include "graphmax/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "graphmax/errors.hpp"

namespace graphmax {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
    if (n == 0) throw GraphError("graph must have at least one vertex");

    edges_.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i >= n || j >= n) {
            throw GraphError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                             ") references a vertex outside [0," + std::to_string(n) + ")");
        }
        if (i == j) throw GraphError("loop edge at vertex " + std::to_string(i));
        edges_.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    // CSR adjacency, neighbors ascending.
    std::vector<std::size_t> degree(n, 0);
    for (auto [i, j] : edges_) {
        ++degree[i];
        ++degree[j];
    }
    adj_offset_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) adj_offset_[v + 1] = adj_offset_[v] + degree[v];
    adj_.resize(adj_offset_[n]);
    std::vector<std::size_t> fill(adj_offset_.begin(), adj_offset_.end() - 1);
    for (auto [i, j] : edges_) {
        adj_[fill[i]++] = j;
        adj_[fill[j]++] = i;
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(adj_offset_[v]),
                  adj_.begin() + static_cast<std::ptrdiff_t>(adj_offset_[v + 1]));
    }

    dist_.assign(n * n, kUnreachable);
    ecc_.assign(n, 0);
    order_.assign(n * n, 0);
    reach_.assign(n, 0);
    shell_end_.resize(n);

    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        int* row = &dist_[s * n];
        row[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : neighbors(u)) {
                if (row[w] == kUnreachable) {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }

        Vertex* ord = &order_[s * n];
        std::size_t count = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (row[v] != kUnreachable) ord[count++] = v;
        }
        std::stable_sort(ord, ord + count, [row](Vertex a, Vertex b) { return row[a] < row[b]; });
        reach_[s] = count;
        ecc_[s] = row[ord[count - 1]];

        auto& shells = shell_end_[s];
        shells.assign(static_cast<std::size_t>(ecc_[s]) + 1, 0);
        for (std::size_t k = 0; k < count; ++k) shells[static_cast<std::size_t>(row[ord[k]])] = k + 1;
    }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    return {adj_.data() + adj_offset_[v], adj_offset_[v + 1] - adj_offset_[v]};
}

std::span<const Vertex> Graph::by_distance(Vertex v) const {
    return {order_.data() + v * n_, reach_[v]};
}

std::size_t Graph::ball_size(Vertex v, int radius) const {
    const auto& shells = shell_end_[v];
    if (radius < 0) return 0;
    if (static_cast<std::size_t>(radius) >= shells.size()) return shells.back();
    return shells[static_cast<std::size_t>(radius)];
}

bool Graph::connected() const noexcept { return reach_[0] == n_; }

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph complete(std::size_t n) {
    if (n < 1) throw GraphError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph star(std::size_t n) {
    if (n < 1) throw GraphError("star graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex k = 1; k < n; ++k) edges.emplace_back(0, k);
    return Graph(n, edges);
}

Graph path(std::size_t n) {
    if (n < 1) throw GraphError("path graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex k = 1; k < n; ++k) edges.emplace_back(k - 1, k);
    return Graph(n, edges);
}

Graph cycle(std::size_t n) {
    if (n < 3) throw GraphError("cycle graph needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex k = 1; k < n; ++k) edges.emplace_back(k - 1, k);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

Ball ball(const Graph& g, Vertex v, int radius) {
    if (v >= g.size()) throw GraphError("ball center " + std::to_string(v) + " out of range");
    if (radius < 0) throw DomainError("ball radius must be nonnegative");
    auto reach = g.by_distance(v);
    std::vector<Vertex> members(reach.begin(),
                                reach.begin() + static_cast<std::ptrdiff_t>(g.ball_size(v, radius)));
    std::sort(members.begin(), members.end());
    return Ball{v, radius, std::move(members)};
}

int diameter(const Graph& g) {
    int d = 0;
    for (Vertex v = 0; v < g.size(); ++v) d = std::max(d, g.eccentricity(v));
    return d;
}

}  // namespace graphmax
