#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dapt/arrangement.hpp"
#include "dapt/mcbssp.hpp"
#include "dapt/rng.hpp"

namespace dapt {

// ---- baselines -------------------------------------------------------------

/// NAM: vertex v_i on leaf i.
Arrangement normal_arrangement(const GuestGraph& g, std::uint64_t d);

/// RAM (contiguous = false) / RCAM (contiguous = true): best of k random
/// arrangements. Throws std::invalid_argument for k == 0.
Arrangement random_arrangement_best_of(const GuestGraph& g, std::uint64_t d, std::uint64_t k,
                                       bool contiguous, std::uint64_t seed);

// ---- greedy ----------------------------------------------------------------

enum class GreedySelection { max_increase, min_increase };

/// G2: fills leaves 1..n in order. The first leaf gets a random vertex; each
/// later leaf gets the unplaced vertex whose placement raises the objective
/// over placed vertices the most (or least). Ties go to the lowest index.
Arrangement greedy_leaf_driven(const GuestGraph& g, std::uint64_t d, std::uint64_t seed,
                               GreedySelection selection = GreedySelection::max_increase);

enum class SearchOrder { bfs, dfs };
enum class ComponentOrder { decreasing_size, seeded_random };

/// BFSG / DFSG: the i-th vertex of a traversal goes to leaf i. With no start
/// vertex every start of each component is tried and the cheapest kept.
/// Components are laid out one after another. BFS expands neighbours in
/// ascending order; DFS pushes them onto a stack in ascending order, so the
/// highest-index neighbour is visited first.
Arrangement search_order_greedy(const GuestGraph& g, std::uint64_t d, SearchOrder order,
                                std::optional<Vertex> start = std::nullopt,
                                ComponentOrder component_order = ComponentOrder::decreasing_size,
                                std::uint64_t seed = 0);

// ---- construction ----------------------------------------------------------

/// Recursive splitting into basic subtrees by minimum cuts of bounded size.
/// With local_search_solver() this is CHLS.
Arrangement construction(const GuestGraph& g, std::uint64_t d, const CutSolver& cut_solver,
                         std::uint64_t seed);

// ---- flips and shifts ------------------------------------------------------

/// Exchange of the l-th and r-th children of node g (1-based) on level e.
struct FlipSpec {
    std::uint32_t e = 0;
    std::uint64_t g = 1;
    std::uint64_t l = 1;
    std::uint64_t r = 2;

    friend bool operator==(const FlipSpec&, const FlipSpec&) = default;
};

/// Throws std::out_of_range unless 0 <= e < h, 1 <= g <= d^e, 1 <= l < r <= d.
Arrangement flip(const Arrangement& a, const FlipSpec& spec);

/// Uniform over all valid (e, g, l, r).
FlipSpec random_flip(const HostTree& tree, Rng& rng);

/// Number of valid flip specs for the tree.
std::uint64_t flip_count(const HostTree& tree);

/// Cyclic rotation of every leaf index by k positions.
Arrangement shift(const Arrangement& a, std::uint64_t k);

/// OV of shift(a, k) for every k in 0..b-1, in O(h (m + b)).
std::vector<Cost> shift_values(const GuestGraph& g, const Arrangement& a);

// ---- local search ----------------------------------------------------------

struct LocalSearchStats {
    std::uint64_t iterations = 0;  // accepted moves (PE) or steps (SF)
};

struct PairExchangeOptions {
    bool distance_table = false;
};

/// PE on the guest graph padded with isolated vertices up to b: pairs (i, j)
/// with i <= n and i < j <= b are scanned lexicographically, the first
/// strictly improving swap is applied and the scan restarts.
Arrangement pair_exchange(const GuestGraph& g, const Arrangement& start,
                          const PairExchangeOptions& options = {}, LocalSearchStats* stats = nullptr);

struct ShiftFlipOptions {
    std::uint64_t stop = 0;     // steps without strict improvement; 0 means 50 * b
    bool accept_equal = true;   // false: shifts only taken on strict improvement
};

/// SF: each step takes the best shift k in 1..b-1 when it does not worsen
/// (or, strictly, improves) the current value, then applies a random flip.
/// Returns the best arrangement seen.
Arrangement shift_flip(const GuestGraph& g, const Arrangement& start, std::uint64_t seed,
                       const ShiftFlipOptions& options = {}, LocalSearchStats* stats = nullptr);

/// Alternates PE and SF until a round improves neither, at most `rounds` times.
Arrangement pair_exchange_shift_flip(const GuestGraph& g, const Arrangement& start, std::uint64_t seed,
                                     unsigned rounds = 5, const ShiftFlipOptions& sf = {},
                                     const PairExchangeOptions& pe = {}, LocalSearchStats* stats = nullptr);

// ---- dispatch --------------------------------------------------------------

enum class StartKind { nam, ram, rcam };

struct HeuristicParams {
    std::uint64_t samples = 1000;  // RAM / RCAM
    StartKind start = StartKind::nam;  // PE / SF starting arrangement
    GreedySelection selection = GreedySelection::max_increase;
    std::optional<Vertex> search_start;  // BFSG / DFSG; empty tries all
    ComponentOrder component_order = ComponentOrder::decreasing_size;
    unsigned cut_restarts = 1;
    ShiftFlipOptions shift_flip;
    unsigned rounds = 5;
    bool distance_table = false;
};

struct HeuristicRun {
    std::string name;
    std::uint64_t seed = 0;
    Arrangement result;
    Cost value = 0;
    std::uint64_t iterations = 0;
    std::chrono::nanoseconds runtime{0};
};

/// nam, ram, rcam, g2, bfsg, dfsg, chls, pe, sf, pe+sf
const std::vector<std::string>& heuristic_names();
bool is_heuristic(std::string_view name);
std::optional<StartKind> start_kind_from_string(std::string_view name);

/// Throws std::invalid_argument for unknown names.
HeuristicRun run_heuristic(std::string_view name, const GuestGraph& g, std::uint64_t d, std::uint64_t seed,
                           const HeuristicParams& params = {});

} // namespace dapt
