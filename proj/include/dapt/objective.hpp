#pragma once

#include <vector>

#include "dapt/arrangement.hpp"

namespace dapt {

/// Leaf distances either computed arithmetically or read from a b x b table.
/// The table costs b^2 bytes, so it is only worth enabling for small trees.
class LeafMetric {
public:
    explicit LeafMetric(const HostTree& tree, bool precompute = false);

    const HostTree& tree() const noexcept { return tree_; }
    bool tabulated() const noexcept { return !table_.empty(); }

    /// t != j required.
    Cost operator()(Leaf t, Leaf j) const noexcept {
        if (!table_.empty()) {
            return table_[(t - 1) * tree_.num_leaves() + (j - 1)];
        }
        return leaf_distance_unchecked(t, j, tree_.degree());
    }

private:
    HostTree tree_;
    std::vector<std::uint8_t> table_;
};

/// Number of edges per distance class: counts[i-1] = a_i, edges at distance 2i.
struct ObjectiveBreakdown {
    std::vector<std::size_t> counts;
    Cost total = 0;
};

/// OV(G, d, phi): summed leaf distance over all edges. Throws InvalidArrangement.
Cost objective(const GuestGraph& g, const Arrangement& a);

ObjectiveBreakdown breakdown(const GuestGraph& g, const Arrangement& a);

/// OV after exchanging the leaves of vi and vj minus OV before, touching only
/// edges incident to vi or vj. Throws std::invalid_argument when vi == vj.
Cost objective_delta_swap(const GuestGraph& g, const Arrangement& a, Vertex vi, Vertex vj);

namespace detail {

Cost objective_unchecked(const GuestGraph& g, std::span<const Leaf> leaves, const LeafMetric& metric);

/// OV delta for exchanging the leaves of distinct vertices vi and vj.
Cost swap_delta(const GuestGraph& g, std::span<const Leaf> leaves, const LeafMetric& metric,
                Vertex vi, Vertex vj);

/// OV delta for moving v onto the currently unused leaf `to`.
Cost relocate_delta(const GuestGraph& g, std::span<const Leaf> leaves, const LeafMetric& metric,
                    Vertex v, Leaf to);

} // namespace detail

} // namespace dapt
