#pragma once

#include <cstdint>

#include "dapt/types.hpp"

namespace dapt {

/// Minimal h with d^h >= n, by integer powering. Throws std::domain_error
/// unless 2 <= d <= n.
std::uint32_t height_for(std::uint64_t n, std::uint64_t d);

/// d^e with overflow detection (throws std::overflow_error).
std::uint64_t checked_pow(std::uint64_t d, std::uint32_t e);

/// Complete d-regular tree of height h with b = d^h leaves. Only the
/// parameters are stored; leaves are addressed by canonical index.
class HostTree {
public:
    HostTree() = default;
    HostTree(std::uint64_t d, std::uint32_t h);

    /// Minimal-height tree able to host n vertices.
    static HostTree for_vertices(std::uint64_t n, std::uint64_t d) {
        return HostTree(d, height_for(n, d));
    }

    std::uint64_t degree() const noexcept { return d_; }
    std::uint32_t height() const noexcept { return h_; }
    Leaf num_leaves() const noexcept { return b_; }

    /// Leaves under one node at level e (root is level 0): d^(h-e).
    Leaf subtree_leaves(std::uint32_t level) const;

    friend bool operator==(const HostTree&, const HostTree&) = default;

private:
    std::uint64_t d_ = 2;
    std::uint32_t h_ = 1;
    Leaf b_ = 2;
};

/// Path length between leaves t != j in canonical order: 2l, where l is the
/// smallest k with floor((t-1)/d^k) == floor((j-1)/d^k). Throws
/// std::domain_error for t == j or out-of-range leaves.
Cost leaf_distance(Leaf t, Leaf j, const HostTree& tree);

/// Unchecked variant for hot loops; t and j must be valid and distinct.
inline Cost leaf_distance_unchecked(Leaf t, Leaf j, std::uint64_t d) noexcept {
    Leaf a = t - 1;
    Leaf c = j - 1;
    Cost l = 0;
    do {
        a /= d;
        c /= d;
        ++l;
    } while (a != c);
    return 2 * l;
}

} // namespace dapt
