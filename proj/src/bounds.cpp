#include "dapt/bounds.hpp"

#include <stdexcept>

#include "dapt/tree.hpp"

namespace dapt {

namespace {

// p * (k) - (d^p - 1)/(d - 1) for a star on k vertices, p = ceil(log_d k).
// Half of the star's optimal OV. k = 1 (isolated vertex) contributes 0.
Cost half_star_value(std::uint64_t k, std::uint64_t d) {
    if (k <= 1) {
        return 0;
    }
    std::uint32_t p = 0;
    std::uint64_t power = 1;
    while (power < k) {
        power *= d;
        ++p;
    }
    const std::uint64_t inner = (power - 1) / (d - 1);  // 1 + d + ... + d^(p-1)
    return static_cast<Cost>(p) * static_cast<Cost>(k) - static_cast<Cost>(inner);
}

void require_degree(std::uint64_t n, std::uint64_t d) {
    if (d < 2 || d > n) {
        throw std::domain_error("bounds require 2 <= d <= n");
    }
}

} // namespace

Cost star_optimum(std::uint64_t n, std::uint64_t d) {
    require_degree(n, d);
    return 2 * half_star_value(n, d);
}

Cost degree_bound(const GuestGraph& g, std::uint64_t d) {
    require_degree(g.num_vertices(), d);
    Cost total = 0;
    for (Vertex v = 1; v <= g.num_vertices(); ++v) {
        total += half_star_value(g.degree(v) + 1, d);
    }
    return total;
}

TrivialBounds trivial_bounds(const GuestGraph& g, std::uint64_t d) {
    const auto h = static_cast<Cost>(height_for(g.num_vertices(), d));
    const auto m = static_cast<Cost>(g.num_edges());
    return {2 * m, 2 * h * m};
}

BoundReport bound_report(const GuestGraph& g, std::uint64_t d) {
    auto [lo, hi] = trivial_bounds(g, d);
    return {degree_bound(g, d), lo, hi};
}

} // namespace dapt
