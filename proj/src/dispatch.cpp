#include <algorithm>
#include <stdexcept>
#include <string>

#include "dapt/heuristics.hpp"
#include "dapt/objective.hpp"

namespace dapt {

const std::vector<std::string>& heuristic_names() {
    static const std::vector<std::string> names{"nam", "ram", "rcam", "g2", "bfsg",
                                                "dfsg", "chls", "pe", "sf", "pe+sf"};
    return names;
}

bool is_heuristic(std::string_view name) {
    const auto& names = heuristic_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::optional<StartKind> start_kind_from_string(std::string_view name) {
    if (name == "nam") return StartKind::nam;
    if (name == "ram") return StartKind::ram;
    if (name == "rcam") return StartKind::rcam;
    return std::nullopt;
}

namespace {

Arrangement starting_point(const GuestGraph& g, std::uint64_t d, std::uint64_t seed, const HeuristicParams& p) {
    switch (p.start) {
    case StartKind::ram:
        return random_arrangement_best_of(g, d, p.samples, false, derive_seed(seed, 1));
    case StartKind::rcam:
        return random_arrangement_best_of(g, d, p.samples, true, derive_seed(seed, 1));
    case StartKind::nam:
        break;
    }
    return normal_arrangement(g, d);
}

} // namespace

HeuristicRun run_heuristic(std::string_view name, const GuestGraph& g, std::uint64_t d, std::uint64_t seed,
                           const HeuristicParams& p) {
    if (!is_heuristic(name)) {
        throw std::invalid_argument("unknown heuristic '" + std::string(name) + "'");
    }
    HeuristicRun run;
    run.name = std::string(name);
    run.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    LocalSearchStats stats;

    if (name == "nam") {
        run.result = normal_arrangement(g, d);
    } else if (name == "ram" || name == "rcam") {
        run.result = random_arrangement_best_of(g, d, p.samples, name == "rcam", seed);
        stats.iterations = p.samples;
    } else if (name == "g2") {
        run.result = greedy_leaf_driven(g, d, seed, p.selection);
    } else if (name == "bfsg" || name == "dfsg") {
        run.result = search_order_greedy(g, d, name == "bfsg" ? SearchOrder::bfs : SearchOrder::dfs,
                                         p.search_start, p.component_order, seed);
    } else if (name == "chls") {
        run.result = construction(g, d, local_search_solver({p.cut_restarts}), seed);
    } else if (name == "pe") {
        run.result = pair_exchange(g, starting_point(g, d, seed, p), {p.distance_table}, &stats);
    } else if (name == "sf") {
        run.result = shift_flip(g, starting_point(g, d, seed, p), seed, p.shift_flip, &stats);
    } else {
        run.result = pair_exchange_shift_flip(g, starting_point(g, d, seed, p), seed, p.rounds, p.shift_flip,
                                              {p.distance_table}, &stats);
    }
    run.value = objective(g, run.result);
    run.iterations = stats.iterations;
    run.runtime = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0);
    return run;
}

} // namespace dapt
