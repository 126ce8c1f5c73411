#include <stdexcept>
#include <string>

#include "dapt/heuristics.hpp"
#include "dapt/objective.hpp"

namespace dapt {

namespace {

void check_flip(const HostTree& tree, const FlipSpec& s) {
    const auto d = tree.degree();
    if (s.e >= tree.height()) {
        throw std::out_of_range("flip level " + std::to_string(s.e) + " not below height " +
                                std::to_string(tree.height()));
    }
    if (s.g < 1 || s.g > checked_pow(d, s.e)) {
        throw std::out_of_range("flip node " + std::to_string(s.g) + " not on level " + std::to_string(s.e));
    }
    if (!(1 <= s.l && s.l < s.r && s.r <= d)) {
        throw std::out_of_range("flip children need 1 <= l < r <= d");
    }
}

void apply_flip(std::span<Leaf> leaves, const HostTree& tree, const FlipSpec& s) {
    const Leaf block = tree.subtree_leaves(s.e);
    const Leaf width = block / tree.degree();
    const Leaf left = (s.g - 1) * block + (s.l - 1) * width;  // leaves left+1 .. left+width
    const Leaf right = (s.g - 1) * block + (s.r - 1) * width;
    const Leaf gap = right - left;
    for (Leaf& x : leaves) {
        if (x > left && x <= left + width) {
            x += gap;
        } else if (x > right && x <= right + width) {
            x -= gap;
        }
    }
}

// Two leaves share their block of size B = d^l after a shift by k exactly
// when k mod B lies in a cyclic window of length B - gap, so per level a
// difference array over k mod B counts the edges kept inside blocks. An
// edge's distance is 2 plus 2 per level below h where it is split.
std::vector<Cost> all_shift_values(const GuestGraph& g, std::span<const Leaf> leaves, const HostTree& tree) {
    const Leaf b = tree.num_leaves();
    const auto m = static_cast<Cost>(g.num_edges());
    std::vector<Cost> values(b, 2 * m);
    std::vector<Cost> diff;
    Leaf block = 1;
    for (std::uint32_t level = 1; level < tree.height(); ++level) {
        block *= tree.degree();
        diff.assign(block + 1, 0);
        auto add = [&](Leaf from, Leaf len) {  // cyclic [from, from + len) mod block
            const Leaf end = from + len;
            ++diff[from];
            if (end <= block) {
                --diff[end];
            } else {
                --diff[block];
                ++diff[0];
                --diff[end - block];
            }
        };
        for (const auto& e : g.edges()) {
            const Leaf p = leaves[e.u - 1] - 1;
            const Leaf q = leaves[e.v - 1] - 1;
            const Leaf gap = (q + b - p) % b;  // forward distance p -> q
            if (gap < block) {
                add((block - p % block) % block, block - gap);
            } else if (b - gap < block) {
                add((block - q % block) % block, block - (b - gap));
            }
        }
        Cost same = 0;
        for (Leaf r = 0; r < block; ++r) {
            same += diff[r];
            diff[r] = same;
        }
        for (Leaf k = 0; k < b; ++k) {
            values[k] += 2 * (m - diff[k % block]);
        }
    }
    return values;
}

} // namespace

Arrangement flip(const Arrangement& a, const FlipSpec& spec) {
    check_flip(a.tree(), spec);
    std::vector<Leaf> leaves(a.leaves().begin(), a.leaves().end());
    apply_flip(leaves, a.tree(), spec);
    return Arrangement(a.tree(), std::move(leaves));
}

std::uint64_t flip_count(const HostTree& tree) {
    const auto d = tree.degree();
    // Internal nodes: (d^h - 1) / (d - 1); child pairs per node: C(d, 2).
    return (tree.num_leaves() - 1) / (d - 1) * (d * (d - 1) / 2);
}

FlipSpec random_flip(const HostTree& tree, Rng& rng) {
    const auto d = tree.degree();
    const std::uint64_t pairs = d * (d - 1) / 2;
    std::uint64_t idx = rng.below(flip_count(tree));
    FlipSpec s;
    std::uint64_t nodes = 1;
    for (s.e = 0; idx >= nodes * pairs; ++s.e) {
        idx -= nodes * pairs;
        nodes *= d;
    }
    s.g = idx / pairs + 1;
    std::uint64_t p = idx % pairs;
    s.l = 1;
    while (p >= d - s.l) {
        p -= d - s.l;
        ++s.l;
    }
    s.r = s.l + 1 + p;
    return s;
}

Arrangement shift(const Arrangement& a, std::uint64_t k) {
    const Leaf b = a.tree().num_leaves();
    k %= b;
    std::vector<Leaf> leaves(a.leaves().begin(), a.leaves().end());
    for (Leaf& x : leaves) {
        x = (x - 1 + k) % b + 1;
    }
    return Arrangement(a.tree(), std::move(leaves));
}

std::vector<Cost> shift_values(const GuestGraph& g, const Arrangement& a) {
    require_valid(a, g);
    return all_shift_values(g, a.leaves(), a.tree());
}

Arrangement pair_exchange(const GuestGraph& g, const Arrangement& start, const PairExchangeOptions& options,
                          LocalSearchStats* stats) {
    require_valid(start, g);
    const HostTree& tree = start.tree();
    const LeafMetric metric(tree, options.distance_table);
    const Vertex n = g.num_vertices();
    const Leaf b = tree.num_leaves();

    // Leaves of the padded graph: real vertices first, then padding vertices
    // on the unused leaves in ascending order.
    std::vector<Leaf> ext(start.leaves().begin(), start.leaves().end());
    {
        std::vector<bool> used(b + 1, false);
        for (Leaf x : ext) used[x] = true;
        for (Leaf x = 1; x <= b; ++x) {
            if (!used[x]) ext.push_back(x);
        }
    }
    const std::span<const Leaf> real(ext.data(), n);

    std::uint64_t swaps = 0;
    bool improved = true;
    while (improved) {
        improved = false;
        for (Vertex i = 1; i <= n && !improved; ++i) {
            for (Leaf j = i + 1; j <= b; ++j) {
                const Cost delta = j <= n ? detail::swap_delta(g, real, metric, i, static_cast<Vertex>(j))
                                          : detail::relocate_delta(g, real, metric, i, ext[j - 1]);
                if (delta < 0) {
                    std::swap(ext[i - 1], ext[j - 1]);
                    ++swaps;
                    improved = true;
                    break;
                }
            }
        }
    }
    if (stats) stats->iterations = swaps;
    ext.resize(n);
    return Arrangement(tree, std::move(ext));
}

Arrangement shift_flip(const GuestGraph& g, const Arrangement& start, std::uint64_t seed,
                       const ShiftFlipOptions& options, LocalSearchStats* stats) {
    require_valid(start, g);
    const HostTree& tree = start.tree();
    const Leaf b = tree.num_leaves();
    const std::uint64_t stop = options.stop ? options.stop : 50 * b;

    std::vector<Leaf> cur(start.leaves().begin(), start.leaves().end());
    Cost cur_value = detail::objective_unchecked(g, cur, LeafMetric(tree));
    std::vector<Leaf> best = cur;
    Cost best_value = cur_value;

    Rng rng(seed);
    std::uint64_t steps = 0;
    for (std::uint64_t idle = 0; idle < stop;) {
        const auto values = all_shift_values(g, cur, tree);
        Leaf best_k = 0;
        Cost best_k_value = 0;
        for (Leaf k = 1; k < b; ++k) {
            if (best_k == 0 || values[k] < best_k_value) {
                best_k = k;
                best_k_value = values[k];
            }
        }
        if (best_k != 0 && (options.accept_equal ? best_k_value <= cur_value : best_k_value < cur_value)) {
            for (Leaf& x : cur) x = (x - 1 + best_k) % b + 1;
            cur_value = best_k_value;
        }
        apply_flip(cur, tree, random_flip(tree, rng));
        ++steps;
        if (cur_value < best_value) {
            best = cur;
            best_value = cur_value;
            idle = 0;
        } else {
            ++idle;
        }
    }
    if (stats) stats->iterations = steps;
    return Arrangement(tree, std::move(best));
}

Arrangement pair_exchange_shift_flip(const GuestGraph& g, const Arrangement& start, std::uint64_t seed,
                                     unsigned rounds, const ShiftFlipOptions& sf, const PairExchangeOptions& pe,
                                     LocalSearchStats* stats) {
    Arrangement cur = start;
    Cost cur_value = objective(g, cur);
    std::uint64_t steps = 0;
    for (unsigned round = 0; round < rounds; ++round) {
        LocalSearchStats s1, s2;
        auto a = pair_exchange(g, cur, pe, &s1);
        auto c = shift_flip(g, a, derive_seed(seed, round), sf, &s2);
        steps += s1.iterations + s2.iterations;
        const Cost value = objective(g, c);
        if (value >= cur_value) break;
        cur = std::move(c);
        cur_value = value;
    }
    if (stats) stats->iterations = steps;
    return cur;
}

} // namespace dapt
