#include <algorithm>
#include <stdexcept>
#include <string>

#include "dapt/heuristics.hpp"
#include "dapt/objective.hpp"

namespace dapt {

Arrangement greedy_leaf_driven(const GuestGraph& g, std::uint64_t d, std::uint64_t seed,
                               GreedySelection selection) {
    const auto tree = HostTree::for_vertices(g.num_vertices(), d);
    const LeafMetric metric(tree);
    const Vertex n = g.num_vertices();
    std::vector<Leaf> leaves(n, 0);  // 0 = unplaced

    Rng rng(seed);
    leaves[rng.below(n)] = 1;
    for (Leaf leaf = 2; leaf <= n; ++leaf) {
        Vertex pick = 0;
        Cost pick_increase = 0;
        for (Vertex v = 1; v <= n; ++v) {
            if (leaves[v - 1] != 0) continue;
            Cost increase = 0;
            for (Vertex w : g.neighbors(v)) {
                if (leaves[w - 1] != 0) increase += metric(leaf, leaves[w - 1]);
            }
            const bool better = selection == GreedySelection::max_increase ? increase > pick_increase
                                                                           : increase < pick_increase;
            if (pick == 0 || better) {
                pick = v;
                pick_increase = increase;
            }
        }
        leaves[pick - 1] = leaf;
    }
    return Arrangement(tree, std::move(leaves));
}

namespace {

std::vector<std::vector<Vertex>> components(const GuestGraph& g) {
    const Vertex n = g.num_vertices();
    std::vector<bool> seen(n + 1, false);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        auto& comp = out.emplace_back();
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
    }
    return out;
}

// Visit order of the component containing s. `mark` must be false on the
// component and is restored before returning.
std::vector<Vertex> traverse(const GuestGraph& g, Vertex s, SearchOrder order, std::vector<bool>& mark) {
    std::vector<Vertex> seq;
    mark[s] = true;
    seq.push_back(s);
    if (order == SearchOrder::bfs) {
        for (std::size_t head = 0; head < seq.size(); ++head) {
            for (Vertex w : g.neighbors(seq[head])) {
                if (!mark[w]) {
                    mark[w] = true;
                    seq.push_back(w);
                }
            }
        }
    } else {
        // Stack DFS: neighbours are pushed ascending, so they are visited descending.
        std::vector<Vertex> stack;
        for (Vertex w : g.neighbors(s)) stack.push_back(w);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            if (mark[v]) continue;
            mark[v] = true;
            seq.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!mark[w]) stack.push_back(w);
            }
        }
    }
    for (Vertex v : seq) mark[v] = false;
    return seq;
}

} // namespace

Arrangement search_order_greedy(const GuestGraph& g, std::uint64_t d, SearchOrder order,
                                std::optional<Vertex> start, ComponentOrder component_order,
                                std::uint64_t seed) {
    const auto tree = HostTree::for_vertices(g.num_vertices(), d);
    const LeafMetric metric(tree);
    const Vertex n = g.num_vertices();
    if (start && (*start < 1 || *start > n)) {
        throw std::out_of_range("start vertex " + std::to_string(*start) + " not in graph");
    }

    auto comps = components(g);
    if (component_order == ComponentOrder::decreasing_size) {
        std::stable_sort(comps.begin(), comps.end(),
                         [](const auto& a, const auto& b) { return a.size() > b.size(); });
    } else {
        Rng rng(seed);
        rng.shuffle(std::span<std::vector<Vertex>>(comps));
    }
    if (start) {
        auto it = std::find_if(comps.begin(), comps.end(), [&](const auto& c) {
            return std::binary_search(c.begin(), c.end(), *start);
        });
        std::rotate(comps.begin(), it, it + 1);
    }

    std::vector<Leaf> leaves(n, 0);
    std::vector<bool> mark(n + 1, false);
    Leaf offset = 0;
    auto place = [&](const std::vector<Vertex>& seq) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            leaves[seq[i] - 1] = offset + i + 1;
        }
    };
    // Edges inside a component only depend on its own leaves, so each
    // component can pick its best start independently.
    auto cost = [&](const std::vector<Vertex>& seq) {
        place(seq);
        Cost total = 0;
        for (Vertex v : seq) {
            for (Vertex w : g.neighbors(v)) {
                if (w > v) total += metric(leaves[v - 1], leaves[w - 1]);
            }
        }
        return total;
    };

    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& comp = comps[c];
        std::vector<Vertex> best;
        if (start && c == 0) {
            best = traverse(g, *start, order, mark);
        } else if (start || comp.size() == 1) {
            best = traverse(g, comp.front(), order, mark);
        } else {
            Cost best_cost = 0;
            for (Vertex s : comp) {
                auto seq = traverse(g, s, order, mark);
                const Cost value = cost(seq);
                if (best.empty() || value < best_cost) {
                    best = std::move(seq);
                    best_cost = value;
                }
            }
        }
        place(best);
        offset += comp.size();
    }
    return Arrangement(tree, std::move(leaves));
}

} // namespace dapt
