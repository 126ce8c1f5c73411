#include "dapt/objective.hpp"

#include <stdexcept>

namespace dapt {

LeafMetric::LeafMetric(const HostTree& tree, bool precompute) : tree_(tree) {
    if (!precompute) {
        return;
    }
    const Leaf b = tree.num_leaves();
    table_.assign(b * b, 0);
    for (Leaf t = 1; t <= b; ++t) {
        for (Leaf j = 1; j <= b; ++j) {
            if (t != j) {
                table_[(t - 1) * b + (j - 1)] =
                    static_cast<std::uint8_t>(leaf_distance_unchecked(t, j, tree.degree()));
            }
        }
    }
}

namespace detail {

Cost objective_unchecked(const GuestGraph& g, std::span<const Leaf> leaves, const LeafMetric& metric) {
    Cost total = 0;
    for (const auto& e : g.edges()) {
        total += metric(leaves[e.u - 1], leaves[e.v - 1]);
    }
    return total;
}

Cost swap_delta(const GuestGraph& g, std::span<const Leaf> leaves, const LeafMetric& metric,
                Vertex vi, Vertex vj) {
    const Leaf p = leaves[vi - 1];
    const Leaf q = leaves[vj - 1];
    Cost delta = 0;
    // The vi-vj edge, if present, keeps its length and is skipped.
    for (Vertex w : g.neighbors(vi)) {
        if (w != vj) {
            const Leaf lw = leaves[w - 1];
            delta += metric(q, lw) - metric(p, lw);
        }
    }
    for (Vertex w : g.neighbors(vj)) {
        if (w != vi) {
            const Leaf lw = leaves[w - 1];
            delta += metric(p, lw) - metric(q, lw);
        }
    }
    return delta;
}

Cost relocate_delta(const GuestGraph& g, std::span<const Leaf> leaves, const LeafMetric& metric,
                    Vertex v, Leaf to) {
    const Leaf p = leaves[v - 1];
    Cost delta = 0;
    for (Vertex w : g.neighbors(v)) {
        const Leaf lw = leaves[w - 1];
        delta += metric(to, lw) - metric(p, lw);
    }
    return delta;
}

} // namespace detail

Cost objective(const GuestGraph& g, const Arrangement& a) {
    require_valid(a, g);
    return detail::objective_unchecked(g, a.leaves(), LeafMetric(a.tree()));
}

ObjectiveBreakdown breakdown(const GuestGraph& g, const Arrangement& a) {
    require_valid(a, g);
    ObjectiveBreakdown out;
    out.counts.assign(a.tree().height(), 0);
    const auto d = a.tree().degree();
    for (const auto& e : g.edges()) {
        const Cost dist = leaf_distance_unchecked(a.leaf_of(e.u), a.leaf_of(e.v), d);
        ++out.counts[static_cast<std::size_t>(dist / 2 - 1)];
        out.total += dist;
    }
    return out;
}

Cost objective_delta_swap(const GuestGraph& g, const Arrangement& a, Vertex vi, Vertex vj) {
    if (vi == vj) {
        throw std::invalid_argument("objective_delta_swap needs two distinct vertices");
    }
    if (vi < 1 || vj < 1 || vi > a.size() || vj > a.size()) {
        throw std::invalid_argument("vertex out of range");
    }
    require_valid(a, g);
    return detail::swap_delta(g, a.leaves(), LeafMetric(a.tree()), vi, vj);
}

} // namespace dapt
