#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dapt/graph.hpp"

namespace dapt {

/// Minimum cut with bounded set size: find X with lower <= |X| <= upper
/// minimizing the number of edges leaving X. Requires 0 < lower <= upper < n.
struct CutInstance {
    GuestGraph graph;
    std::size_t lower = 1;
    std::size_t upper = 1;
};

struct CutSolution {
    std::vector<Vertex> side;  // ascending
    std::size_t cut = 0;
};

/// Throws std::invalid_argument unless 0 < lower <= upper < n.
void validate(const CutInstance& ci);

/// Edges with exactly one endpoint in X. Throws std::out_of_range for
/// vertices outside 1..n.
std::size_t cut_size(const GuestGraph& g, std::span<const Vertex> side);

/// Merge order used by every solver: smaller cut, then larger |X|, then
/// lexicographically smaller X.
bool preferred(const CutSolution& a, const CutSolution& b);

/// Pluggable MCBSSP solver: (instance, seed) -> solution.
using CutSolver = std::function<CutSolution(const CutInstance&, std::uint64_t)>;

struct LocalSearchCutOptions {
    unsigned restarts = 1;  // random starts per set size k
};

/// For each k in lower..upper, starts from a seeded random X with |X| = k and
/// applies first-improving pair swaps (X scanned ascending, then the
/// complement ascending) until no swap lowers the cut.
CutSolution local_search_cut(const CutInstance& ci, std::uint64_t seed,
                             const LocalSearchCutOptions& options = {});

/// Exact optimum by enumerating all subsets with admissible size. Throws
/// std::domain_error for graphs with more than 40 vertices.
CutSolution exhaustive_cut(const CutInstance& ci);

CutSolver local_search_solver(LocalSearchCutOptions options = {});
CutSolver exhaustive_solver();

} // namespace dapt
