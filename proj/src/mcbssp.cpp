#include "dapt/mcbssp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dapt/rng.hpp"

namespace dapt {

void validate(const CutInstance& ci) {
    const std::size_t n = ci.graph.num_vertices();
    if (!(0 < ci.lower && ci.lower <= ci.upper && ci.upper < n)) {
        throw std::invalid_argument("cut instance needs 0 < l <= u < n (l=" + std::to_string(ci.lower) +
                                    ", u=" + std::to_string(ci.upper) + ", n=" + std::to_string(n) + ")");
    }
}

std::size_t cut_size(const GuestGraph& g, std::span<const Vertex> side) {
    std::vector<bool> in(static_cast<std::size_t>(g.num_vertices()) + 1, false);
    for (Vertex v : side) {
        if (v < 1 || v > g.num_vertices()) {
            throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
        }
        in[v] = true;
    }
    std::size_t cut = 0;
    for (const auto& e : g.edges()) {
        cut += in[e.u] != in[e.v] ? 1 : 0;
    }
    return cut;
}

bool preferred(const CutSolution& a, const CutSolution& b) {
    if (a.cut != b.cut) return a.cut < b.cut;
    if (a.side.size() != b.side.size()) return a.side.size() > b.side.size();
    return a.side < b.side;
}

namespace {

// One descent from a random set of size k.
CutSolution descend(const GuestGraph& g, std::size_t k, Rng& rng) {
    const Vertex n = g.num_vertices();
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{1});
    rng.shuffle(std::span<Vertex>(all));

    std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < k; ++i) {
        in[all[i]] = true;
    }
    // Neighbours inside X, per vertex.
    std::vector<long> inside(static_cast<std::size_t>(n) + 1, 0);
    long cut = 0;
    for (const auto& e : g.edges()) {
        inside[e.u] += in[e.v] ? 1 : 0;
        inside[e.v] += in[e.u] ? 1 : 0;
        cut += in[e.u] != in[e.v] ? 1 : 0;
    }
    // Cut change when a single vertex switches side.
    auto leave_gain = [&](Vertex u) { return 2 * inside[u] - static_cast<long>(g.degree(u)); };
    auto join_gain = [&](Vertex v) { return static_cast<long>(g.degree(v)) - 2 * inside[v]; };

    std::vector<Vertex> members;
    std::vector<Vertex> others;
    bool improved = true;
    while (improved) {
        improved = false;
        members.clear();
        others.clear();
        for (Vertex v = 1; v <= n; ++v) {
            (in[v] ? members : others).push_back(v);
        }
        for (Vertex u : members) {
            const long du = leave_gain(u);
            for (Vertex v : others) {
                long delta = du + join_gain(v);
                if (delta >= 0) continue;  // the u-v correction is non-negative
                if (g.has_edge(u, v)) delta += 2;
                if (delta >= 0) continue;
                in[u] = false;
                in[v] = true;
                for (Vertex w : g.neighbors(u)) --inside[w];
                for (Vertex w : g.neighbors(v)) ++inside[w];
                cut += delta;
                improved = true;
                break;
            }
            if (improved) break;
        }
    }
    CutSolution s;
    for (Vertex v = 1; v <= n; ++v) {
        if (in[v]) s.side.push_back(v);
    }
    s.cut = static_cast<std::size_t>(cut);
    return s;
}

} // namespace

CutSolution local_search_cut(const CutInstance& ci, std::uint64_t seed, const LocalSearchCutOptions& options) {
    validate(ci);
    const unsigned restarts = std::max(1u, options.restarts);
    CutSolution best;
    bool have = false;
    for (std::size_t k = ci.lower; k <= ci.upper; ++k) {
        for (unsigned r = 0; r < restarts; ++r) {
            Rng rng(derive_seed(seed, k * restarts + r));
            auto s = descend(ci.graph, k, rng);
            if (!have || preferred(s, best)) {
                best = std::move(s);
                have = true;
            }
        }
    }
    return best;
}

CutSolution exhaustive_cut(const CutInstance& ci) {
    validate(ci);
    const Vertex n = ci.graph.num_vertices();
    if (n > 40) {
        throw std::domain_error("exhaustive cut limited to 40 vertices");
    }
    std::vector<std::uint64_t> nbr_mask(n, 0);
    for (const auto& e : ci.graph.edges()) {
        nbr_mask[e.u - 1] |= std::uint64_t{1} << (e.v - 1);
        nbr_mask[e.v - 1] |= std::uint64_t{1} << (e.u - 1);
    }
    CutSolution best;
    bool have = false;
    for (std::size_t k = ci.lower; k <= ci.upper; ++k) {
        // Gosper's hack over all k-subsets of n bits.
        std::uint64_t set = (std::uint64_t{1} << k) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (set < limit) {
            std::size_t cut = 0;
            for (Vertex i = 0; i < n; ++i) {
                if (set >> i & 1) cut += static_cast<std::size_t>(__builtin_popcountll(nbr_mask[i] & ~set));
            }
            CutSolution s;
            s.cut = cut;
            for (Vertex i = 0; i < n; ++i) {
                if (set >> i & 1) s.side.push_back(i + 1);
            }
            if (!have || preferred(s, best)) {
                best = std::move(s);
                have = true;
            }
            const std::uint64_t c = set & (~set + 1);
            const std::uint64_t r = set + c;
            set = (((r ^ set) >> 2) / c) | r;
        }
    }
    return best;
}

CutSolver local_search_solver(LocalSearchCutOptions options) {
    return [options](const CutInstance& ci, std::uint64_t seed) { return local_search_cut(ci, seed, options); };
}

CutSolver exhaustive_solver() {
    return [](const CutInstance& ci, std::uint64_t) { return exhaustive_cut(ci); };
}

} // namespace dapt
