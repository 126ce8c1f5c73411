#pragma once

#include <span>
#include <vector>

#include "dapt/graph.hpp"
#include "dapt/tree.hpp"

namespace dapt {

/// Vertex-to-leaf assignment phi for a host tree. Stored as given: use
/// validate_arrangement() before trusting range and injectivity.
class Arrangement {
public:
    Arrangement() = default;
    Arrangement(HostTree tree, std::vector<Leaf> leaves)
        : tree_(tree), leaves_(std::move(leaves)) {}

    const HostTree& tree() const noexcept { return tree_; }
    Vertex size() const noexcept { return static_cast<Vertex>(leaves_.size()); }

    /// phi(v) for 1-based v.
    Leaf leaf_of(Vertex v) const { return leaves_[v - 1]; }
    void set_leaf(Vertex v, Leaf leaf) { leaves_[v - 1] = leaf; }
    std::span<const Leaf> leaves() const noexcept { return leaves_; }

    void swap_vertices(Vertex a, Vertex b) { std::swap(leaves_[a - 1], leaves_[b - 1]); }

    friend bool operator==(const Arrangement&, const Arrangement&) = default;

private:
    HostTree tree_;
    std::vector<Leaf> leaves_;
};

/// True iff the arrangement has one leaf per vertex of g, all in 1..b, pairwise distinct.
bool validate_arrangement(const Arrangement& a, const GuestGraph& g);

/// True iff the used leaves form one consecutive run. Assumes a valid arrangement.
bool is_contiguous(const Arrangement& a);

/// Throws InvalidArrangement with a reason when validate_arrangement fails.
void require_valid(const Arrangement& a, const GuestGraph& g);

} // namespace dapt
