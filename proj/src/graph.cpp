#include "dapt/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dapt {

GuestGraph::GuestGraph(Vertex n, std::vector<Edge> edges) : n_(n) {
    for (auto& e : edges) {
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u < 1 || e.v < 1 || e.u > n || e.v > n) {
            throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                        ") out of range 1.." + std::to_string(n));
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    offsets_.assign(static_cast<std::size_t>(n) + 2, 0);
    for (const auto& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) {
        offsets_[i] += offsets_[i - 1];
    }
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
        adjacency_[fill[e.u]++] = e.v;
        adjacency_[fill[e.v]++] = e.u;
    }
    for (Vertex v = 1; v <= n_; ++v) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }
}

bool GuestGraph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

GuestGraph GuestGraph::induced(std::span<const Vertex> vertices) const {
    std::vector<Vertex> local(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        local[vertices[i]] = static_cast<Vertex>(i + 1);
    }
    std::vector<Edge> sub;
    for (Vertex v : vertices) {
        for (Vertex w : neighbors(v)) {
            if (v < w && local[w] != 0) {
                sub.push_back({local[v], local[w]});
            }
        }
    }
    return GuestGraph(static_cast<Vertex>(vertices.size()), std::move(sub));
}

} // namespace dapt
