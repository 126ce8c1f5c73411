#include <algorithm>

#include "dapt/heuristics.hpp"

namespace dapt {

namespace {

class Builder {
public:
    Builder(const GuestGraph& g, const HostTree& tree, const CutSolver& solver, std::uint64_t seed)
        : g_(g), d_(tree.degree()), solver_(solver), seed_(seed), rng_(derive_seed(seed, 0)),
          leaves_(g.num_vertices(), 0) {}

    // Places `vertices` (ascending) into the subtree of height h whose first
    // leaf is offset + 1.
    void place(const std::vector<Vertex>& vertices, std::uint32_t h, Leaf offset) {
        if (vertices.empty()) return;
        if (h == 1) {
            std::vector<Leaf> slots(d_);
            for (Leaf i = 0; i < d_; ++i) slots[i] = offset + i + 1;
            rng_.shuffle(std::span<Leaf>(slots));
            for (std::size_t i = 0; i < vertices.size(); ++i) {
                leaves_[vertices[i] - 1] = slots[i];
            }
            return;
        }
        const Leaf sub = checked_pow(d_, h - 1);
        Leaf unused = sub * d_ - vertices.size();
        std::vector<Vertex> rest = vertices;
        for (std::uint64_t i = 0; i < d_ && !rest.empty(); ++i) {
            if (unused >= sub) {
                unused -= sub;
                continue;
            }
            std::vector<Vertex> part;
            if (rest.size() <= sub) {
                part = rest;
            } else {
                CutInstance ci{g_.induced(rest), static_cast<std::size_t>(sub - unused),
                               static_cast<std::size_t>(sub)};
                const auto sol = solver_(ci, derive_seed(seed_, ++cuts_));
                for (Vertex local : sol.side) {
                    part.push_back(rest[local - 1]);
                }
                std::sort(part.begin(), part.end());
            }
            unused -= sub - part.size();
            std::vector<Vertex> remaining;
            std::set_difference(rest.begin(), rest.end(), part.begin(), part.end(),
                                std::back_inserter(remaining));
            rest = std::move(remaining);
            place(part, h - 1, offset + i * sub);
        }
    }

    std::vector<Leaf> take() { return std::move(leaves_); }

private:
    const GuestGraph& g_;
    std::uint64_t d_;
    const CutSolver& solver_;
    std::uint64_t seed_;
    std::uint64_t cuts_ = 0;
    Rng rng_;
    std::vector<Leaf> leaves_;
};

} // namespace

Arrangement construction(const GuestGraph& g, std::uint64_t d, const CutSolver& cut_solver, std::uint64_t seed) {
    const auto tree = HostTree::for_vertices(g.num_vertices(), d);
    Builder builder(g, tree, cut_solver, seed);
    std::vector<Vertex> all(g.num_vertices());
    for (Vertex v = 1; v <= g.num_vertices(); ++v) all[v - 1] = v;
    builder.place(all, tree.height(), 0);
    return Arrangement(tree, builder.take());
}

} // namespace dapt
