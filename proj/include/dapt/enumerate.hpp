#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>

#include "dapt/arrangement.hpp"

namespace dapt {

struct EnumOptions {
    /// Stop after this many complete arrangements have been evaluated.
    std::uint64_t max_arrangements = std::numeric_limits<std::uint64_t>::max();
    /// Optional wall-clock limit; makes the result timing dependent.
    std::optional<std::chrono::milliseconds> time_limit;
    /// Only try one representative of leaves that are interchangeable under
    /// permutations of empty sibling subtrees (these preserve OV).
    bool symmetry_pruning = true;
    /// Drop partial assignments whose cost plus 2 per unplaced edge cannot beat the incumbent.
    bool bound_pruning = true;
};

struct EnumResult {
    Arrangement best;
    Cost value = 0;
    std::uint64_t explored = 0;  // complete arrangements evaluated
    std::uint64_t nodes = 0;     // partial assignments visited
    bool exhausted = false;      // true: value is the global optimum
};

/// Complete enumeration of injective vertex-to-leaf maps on the minimal-height
/// tree. The normal arrangement seeds the incumbent. Throws
/// std::invalid_argument for a zero budget and std::domain_error unless 2 <= d <= n.
EnumResult enumerate_optimal(const GuestGraph& g, std::uint64_t d, const EnumOptions& options = {});

} // namespace dapt
