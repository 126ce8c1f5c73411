#include "dapt/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dapt/objective.hpp"

namespace dapt {

namespace {

// Placement order: repeatedly the unplaced vertex with most placed
// neighbours (then higher degree, then lower index). Edges close early,
// which tightens the bound.
std::vector<Vertex> placement_order(const GuestGraph& g) {
    const Vertex n = g.num_vertices();
    std::vector<Vertex> order;
    std::vector<bool> placed(n + 1, false);
    std::vector<std::size_t> links(n + 1, 0);
    for (Vertex step = 0; step < n; ++step) {
        Vertex pick = 0;
        for (Vertex v = 1; v <= n; ++v) {
            if (placed[v]) continue;
            if (pick == 0 || links[v] > links[pick] ||
                (links[v] == links[pick] && g.degree(v) > g.degree(pick))) {
                pick = v;
            }
        }
        placed[pick] = true;
        order.push_back(pick);
        for (Vertex w : g.neighbors(pick)) {
            ++links[w];
        }
    }
    return order;
}

class Search {
public:
    Search(const GuestGraph& g, const HostTree& tree, const EnumOptions& opt)
        : g_(g), tree_(tree), metric_(tree), opt_(opt), order_(placement_order(g)),
          leaves_(g.num_vertices(), 0) {
        const auto h = tree.height();
        occupancy_.resize(h + 1);
        capacity_.resize(h + 1);
        for (std::uint32_t e = 0; e <= h; ++e) {
            occupancy_[e].assign(checked_pow(tree.degree(), e), 0);
            capacity_[e] = tree.subtree_leaves(e);
        }
        // Edges that close when order_[i] is placed.
        back_edges_.resize(order_.size());
        std::vector<std::size_t> pos(g.num_vertices() + 1);
        for (std::size_t i = 0; i < order_.size(); ++i) {
            pos[order_[i]] = i;
        }
        open_after_.assign(order_.size() + 1, 0);
        for (std::size_t i = 0; i < order_.size(); ++i) {
            for (Vertex w : g.neighbors(order_[i])) {
                if (pos[w] < i) {
                    back_edges_[i].push_back(w);
                }
            }
        }
        std::size_t closed = 0;
        open_after_[0] = g.num_edges();
        for (std::size_t i = 0; i < order_.size(); ++i) {
            closed += back_edges_[i].size();
            open_after_[i + 1] = g.num_edges() - closed;
        }
        start_ = std::chrono::steady_clock::now();
    }

    EnumResult run() {
        std::vector<Leaf> nam(g_.num_vertices());
        for (Vertex v = 1; v <= g_.num_vertices(); ++v) {
            nam[v - 1] = v;
        }
        best_leaves_ = nam;
        best_ = detail::objective_unchecked(g_, nam, metric_);
        // The normal arrangement is the incumbent; only strictly better ones replace it.
        descend(0, 0);
        EnumResult r;
        r.best = Arrangement(tree_, best_leaves_);
        r.value = best_;
        r.explored = explored_;
        r.nodes = nodes_;
        r.exhausted = !stopped_;
        return r;
    }

private:
    void descend(std::size_t depth, Cost partial) {
        if (stopped_) return;
        ++nodes_;
        if ((nodes_ & 0xfff) == 0 && opt_.time_limit &&
            std::chrono::steady_clock::now() - start_ > *opt_.time_limit) {
            stopped_ = true;
            return;
        }
        if (depth == order_.size()) {
            ++explored_;
            if (partial < best_) {
                best_ = partial;
                best_leaves_ = leaves_;
            }
            if (explored_ >= opt_.max_arrangements) {
                stopped_ = true;
            }
            return;
        }
        const Vertex v = order_[depth];
        candidates_scratch_.clear();
        collect_candidates(candidates_scratch_);
        const std::vector<Leaf> candidates = candidates_scratch_;
        for (Leaf leaf : candidates) {
            Cost added = 0;
            for (Vertex w : back_edges_[depth]) {
                added += metric_(leaf, leaves_[w - 1]);
            }
            const Cost cost = partial + added;
            if (opt_.bound_pruning &&
                cost + 2 * static_cast<Cost>(open_after_[depth + 1]) >= best_) {
                continue;
            }
            occupy(leaf, +1);
            leaves_[v - 1] = leaf;
            descend(depth + 1, cost);
            occupy(leaf, -1);
            leaves_[v - 1] = 0;
            if (stopped_) return;
        }
    }

    void occupy(Leaf leaf, int delta) {
        Leaf idx = leaf - 1;
        for (std::uint32_t e = tree_.height() + 1; e-- > 0;) {
            occupancy_[e][idx] = static_cast<std::uint64_t>(static_cast<std::int64_t>(occupancy_[e][idx]) + delta);
            idx /= tree_.degree();
        }
    }

    void collect_candidates(std::vector<Leaf>& out) const {
        if (!opt_.symmetry_pruning) {
            const auto& level = occupancy_[tree_.height()];
            for (Leaf i = 0; i < level.size(); ++i) {
                if (level[i] == 0) out.push_back(i + 1);
            }
            return;
        }
        walk(0, 0, out);
    }

    // Occupied children are explored; of the empty children only the first,
    // which contributes its leftmost leaf.
    void walk(std::uint32_t level, std::uint64_t node, std::vector<Leaf>& out) const {
        const auto h = tree_.height();
        const auto d = tree_.degree();
        if (level == h) {
            if (occupancy_[h][node] == 0) out.push_back(node + 1);
            return;
        }
        bool took_empty = false;
        for (std::uint64_t c = 0; c < d; ++c) {
            const std::uint64_t child = node * d + c;
            const auto count = occupancy_[level + 1][child];
            if (count == capacity_[level + 1]) continue;
            if (count > 0) {
                walk(level + 1, child, out);
            } else if (!took_empty) {
                took_empty = true;
                out.push_back(child * capacity_[level + 1] + 1);
            }
        }
    }

    const GuestGraph& g_;
    HostTree tree_;
    LeafMetric metric_;
    EnumOptions opt_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> back_edges_;
    std::vector<std::size_t> open_after_;
    std::vector<Leaf> leaves_;
    std::vector<std::vector<std::uint64_t>> occupancy_;
    std::vector<std::uint64_t> capacity_;
    std::vector<Leaf> candidates_scratch_;
    std::vector<Leaf> best_leaves_;
    Cost best_ = 0;
    std::uint64_t explored_ = 0;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
    std::chrono::steady_clock::time_point start_;
};

} // namespace

EnumResult enumerate_optimal(const GuestGraph& g, std::uint64_t d, const EnumOptions& options) {
    if (options.max_arrangements == 0) {
        throw std::invalid_argument("enumeration budget must be positive");
    }
    if (g.num_vertices() < 2) {
        throw std::domain_error("enumeration needs at least 2 vertices");
    }
    const auto tree = HostTree::for_vertices(g.num_vertices(), d);
    return Search(g, tree, options).run();
}

} // namespace dapt
