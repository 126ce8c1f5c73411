#pragma once

// Reference implementations used only by tests. They share no code with the
// library: the tree is built explicitly and distances come from BFS.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <random>
#include <vector>

#include "dapt/graph.hpp"

namespace oracle {

/// Complete d-ary tree of height h with explicit nodes. Node 0 is the root;
/// children are appended level by level, so leaves end up in canonical order.
struct ExplicitTree {
    std::vector<std::vector<int>> adj;
    std::vector<int> leaves;  // leaves[i] is the node of leaf i+1

    ExplicitTree(int d, int h) {
        adj.emplace_back();
        std::vector<int> level{0};
        for (int depth = 0; depth < h; ++depth) {
            std::vector<int> next;
            for (int parent : level) {
                for (int c = 0; c < d; ++c) {
                    const int id = static_cast<int>(adj.size());
                    adj.emplace_back();
                    adj[parent].push_back(id);
                    adj[id].push_back(parent);
                    next.push_back(id);
                }
            }
            level = std::move(next);
        }
        leaves = level;
    }

    std::vector<int> bfs(int source) const {
        std::vector<int> dist(adj.size(), -1);
        std::deque<int> q{source};
        dist[source] = 0;
        while (!q.empty()) {
            const int v = q.front();
            q.pop_front();
            for (int w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        return dist;
    }

    /// Leaf-to-leaf distance matrix, indexed by 0-based leaf.
    std::vector<std::vector<int>> leaf_matrix() const {
        std::vector<std::vector<int>> out;
        for (int s : leaves) {
            const auto dist = bfs(s);
            std::vector<int> row;
            for (int t : leaves) row.push_back(dist[t]);
            out.push_back(std::move(row));
        }
        return out;
    }
};

inline int height(std::uint64_t n, std::uint64_t d) {
    int h = 0;
    std::uint64_t p = 1;
    while (p < n) {
        p *= d;
        ++h;
    }
    return h;
}

/// Objective by explicit tree distances.
inline std::int64_t objective(const dapt::GuestGraph& g, const std::vector<std::uint64_t>& leaves,
                              const std::vector<std::vector<int>>& matrix) {
    std::int64_t total = 0;
    for (const auto& e : g.edges()) total += matrix[leaves[e.u - 1] - 1][leaves[e.v - 1] - 1];
    return total;
}

/// Minimum over all injective maps, by plain recursion (tiny instances only).
inline std::int64_t brute_force_optimum(const dapt::GuestGraph& g, std::uint64_t d) {
    const int h = height(g.num_vertices(), d);
    const ExplicitTree tree(static_cast<int>(d), h);
    const auto matrix = tree.leaf_matrix();
    const int n = static_cast<int>(g.num_vertices());
    const int b = static_cast<int>(tree.leaves.size());
    std::vector<std::uint64_t> leaves(n, 0);
    std::vector<bool> used(b, false);
    std::int64_t best = -1;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            const auto value = objective(g, leaves, matrix);
            if (best < 0 || value < best) best = value;
            return;
        }
        for (int x = 0; x < b; ++x) {
            if (used[x]) continue;
            used[x] = true;
            leaves[v] = x + 1;
            self(self, v + 1);
            used[x] = false;
        }
    };
    rec(rec, 0);
    return best;
}

inline dapt::GuestGraph random_graph(std::mt19937_64& rng, dapt::Vertex n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<dapt::Edge> edges;
    for (dapt::Vertex u = 1; u <= n; ++u) {
        for (dapt::Vertex v = u + 1; v <= n; ++v) {
            if (coin(rng)) edges.push_back({u, v});
        }
    }
    return dapt::GuestGraph(n, std::move(edges));
}

/// Uniform injective map of n vertices into leaves 1..b.
inline std::vector<std::uint64_t> random_leaves(std::mt19937_64& rng, std::uint64_t n, std::uint64_t b) {
    std::vector<std::uint64_t> all(b);
    std::iota(all.begin(), all.end(), 1);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(n);
    return all;
}

inline dapt::GuestGraph path(dapt::Vertex n) {
    std::vector<dapt::Edge> e;
    for (dapt::Vertex v = 1; v < n; ++v) e.push_back({v, v + 1});
    return dapt::GuestGraph(n, e);
}

inline dapt::GuestGraph cycle(dapt::Vertex n) {
    std::vector<dapt::Edge> e;
    for (dapt::Vertex v = 1; v < n; ++v) e.push_back({v, v + 1});
    e.push_back({1, n});
    return dapt::GuestGraph(n, e);
}

inline dapt::GuestGraph star(dapt::Vertex n) {
    std::vector<dapt::Edge> e;
    for (dapt::Vertex v = 2; v <= n; ++v) e.push_back({1, v});
    return dapt::GuestGraph(n, e);
}

// Graphs transcribed from the worked examples.
inline dapt::GuestGraph sample_graph() {
    return dapt::GuestGraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 4}, {2, 4}});
}

inline dapt::GuestGraph extended_star() {
    return dapt::GuestGraph(12, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {5, 6}, {1, 7}, {7, 8}, {8, 9}, {1, 10}, {10, 11}, {11, 12}});
}

inline dapt::GuestGraph counterexample() {
    return dapt::GuestGraph(7, {{1, 2}, {1, 3}, {1, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}});
}

} // namespace oracle
