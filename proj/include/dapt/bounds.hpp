#pragma once

#include <cstdint>

#include "dapt/graph.hpp"

namespace dapt {

struct BoundReport {
    Cost degree_bound = 0;
    Cost trivial_lower = 0;  // 2m
    Cost trivial_upper = 0;  // 2hm

    /// max(DB, 2m): both are valid lower bounds.
    Cost lower() const noexcept { return degree_bound > trivial_lower ? degree_bound : trivial_lower; }
};

/// Optimal OV of a star with n vertices on the d-regular tree of height
/// ceil(log_d n): 2(h*n - (d^h - 1)/(d - 1)). Throws std::domain_error unless
/// 2 <= d <= n.
Cost star_optimum(std::uint64_t n, std::uint64_t d);

/// Degree bound: half the sum over vertices of the optimal arrangement of
/// the star formed by each vertex and its neighbours.
Cost degree_bound(const GuestGraph& g, std::uint64_t d);

struct TrivialBounds {
    Cost lower;
    Cost upper;
};

/// (2m, 2hm) with h = height_for(n, d).
TrivialBounds trivial_bounds(const GuestGraph& g, std::uint64_t d);

BoundReport bound_report(const GuestGraph& g, std::uint64_t d);

} // namespace dapt
