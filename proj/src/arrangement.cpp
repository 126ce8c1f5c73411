#include "dapt/arrangement.hpp"

#include <algorithm>
#include <string>

namespace dapt {

namespace {

// Empty string when valid, otherwise the first violation found.
std::string first_violation(const Arrangement& a, const GuestGraph& g) {
    if (a.size() != g.num_vertices()) {
        return "arrangement has " + std::to_string(a.size()) + " entries, graph has " +
               std::to_string(g.num_vertices()) + " vertices";
    }
    const Leaf b = a.tree().num_leaves();
    std::vector<Leaf> sorted(a.leaves().begin(), a.leaves().end());
    for (Vertex v = 1; v <= a.size(); ++v) {
        Leaf leaf = a.leaf_of(v);
        if (leaf < 1 || leaf > b) {
            return "vertex " + std::to_string(v) + " mapped to leaf " + std::to_string(leaf) +
                   " outside 1.." + std::to_string(b);
        }
    }
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        return "leaf " + std::to_string(*dup) + " used twice";
    }
    return {};
}

} // namespace

bool validate_arrangement(const Arrangement& a, const GuestGraph& g) {
    return first_violation(a, g).empty();
}

void require_valid(const Arrangement& a, const GuestGraph& g) {
    if (auto why = first_violation(a, g); !why.empty()) {
        throw InvalidArrangement(why);
    }
}

bool is_contiguous(const Arrangement& a) {
    if (a.size() == 0) {
        return true;
    }
    auto [lo, hi] = std::minmax_element(a.leaves().begin(), a.leaves().end());
    // Injective, so n distinct leaves spanning exactly n positions form a run.
    return *hi - *lo + 1 == a.size();
}

} // namespace dapt
