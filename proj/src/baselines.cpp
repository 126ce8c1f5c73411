#include <numeric>
#include <stdexcept>

#include "dapt/heuristics.hpp"
#include "dapt/objective.hpp"

namespace dapt {

Arrangement normal_arrangement(const GuestGraph& g, std::uint64_t d) {
    const auto tree = HostTree::for_vertices(g.num_vertices(), d);
    std::vector<Leaf> leaves(g.num_vertices());
    std::iota(leaves.begin(), leaves.end(), Leaf{1});
    return Arrangement(tree, std::move(leaves));
}

Arrangement random_arrangement_best_of(const GuestGraph& g, std::uint64_t d, std::uint64_t k,
                                       bool contiguous, std::uint64_t seed) {
    if (k == 0) {
        throw std::invalid_argument("sample count must be positive");
    }
    const auto tree = HostTree::for_vertices(g.num_vertices(), d);
    const LeafMetric metric(tree);
    const Vertex n = g.num_vertices();
    const Leaf b = tree.num_leaves();
    Rng rng(seed);

    std::vector<Leaf> pool(contiguous ? n : b);
    std::vector<Leaf> best;
    Cost best_value = 0;
    for (std::uint64_t sample = 0; sample < k; ++sample) {
        const Leaf offset = contiguous ? rng.below(b - n + 1) : 0;
        std::iota(pool.begin(), pool.end(), offset + 1);
        // Partial Fisher-Yates: the first n entries become a uniform injective draw.
        for (Vertex i = 0; i < n; ++i) {
            std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
        }
        std::span<const Leaf> leaves(pool.data(), n);
        const Cost value = detail::objective_unchecked(g, leaves, metric);
        if (best.empty() || value < best_value) {
            best.assign(leaves.begin(), leaves.end());
            best_value = value;
        }
    }
    return Arrangement(tree, std::move(best));
}

} // namespace dapt
