#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dapt/types.hpp"

namespace dapt {

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on v_1..v_n.
///
/// Edges are normalized to u < v and kept sorted; duplicates (in either
/// orientation) collapse into one edge. Self-loops and out-of-range endpoints
/// throw std::invalid_argument. Adjacency lists are sorted ascending.
class GuestGraph {
public:
    GuestGraph() = default;
    GuestGraph(Vertex n, std::vector<Edge> edges);

    Vertex num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i-1].
    GuestGraph induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const GuestGraph& a, const GuestGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Vertex n_ = 0;
    std::vector<Edge> edges_;
    // CSR adjacency indexed by 1-based vertex; offsets_[0] is unused.
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
};

} // namespace dapt
