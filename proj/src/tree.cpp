#include "dapt/tree.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace dapt {

std::uint64_t checked_pow(std::uint64_t d, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (d != 0 && r > std::numeric_limits<std::uint64_t>::max() / d) {
            throw std::overflow_error("d^h overflows 64 bits");
        }
        r *= d;
    }
    return r;
}

std::uint32_t height_for(std::uint64_t n, std::uint64_t d) {
    if (d < 2 || d > n) {
        throw std::domain_error("height_for requires 2 <= d <= n (d=" + std::to_string(d) +
                                ", n=" + std::to_string(n) + ")");
    }
    std::uint32_t h = 0;
    std::uint64_t p = 1;
    while (p < n) {
        ++h;
        if (p > std::numeric_limits<std::uint64_t>::max() / d) {
            break;  // p * d exceeds any 64-bit n
        }
        p *= d;
    }
    return h;
}

HostTree::HostTree(std::uint64_t d, std::uint32_t h) : d_(d), h_(h), b_(0) {
    if (d < 2) {
        throw std::domain_error("tree degree must be at least 2");
    }
    if (h < 1) {
        throw std::domain_error("tree height must be at least 1");
    }
    b_ = checked_pow(d, h);
}

Leaf HostTree::subtree_leaves(std::uint32_t level) const {
    if (level > h_) {
        throw std::out_of_range("level exceeds tree height");
    }
    return checked_pow(d_, h_ - level);
}

Cost leaf_distance(Leaf t, Leaf j, const HostTree& tree) {
    if (t < 1 || j < 1 || t > tree.num_leaves() || j > tree.num_leaves()) {
        throw std::domain_error("leaf index out of range");
    }
    if (t == j) {
        throw std::domain_error("leaf_distance called with identical leaves");
    }
    return leaf_distance_unchecked(t, j, tree.degree());
}

} // namespace dapt
