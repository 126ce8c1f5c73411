#include <doctest.h>

#include <map>
#include <set>

#include "dapt/bounds.hpp"
#include "dapt/enumerate.hpp"
#include "dapt/heuristics.hpp"
#include "dapt/instance_gen.hpp"
#include "dapt/objective.hpp"
#include "oracles.hpp"

using namespace dapt;

namespace {

Arrangement random_arrangement(std::mt19937_64& rng, const GuestGraph& g, std::uint64_t d) {
    const auto tree = HostTree::for_vertices(g.num_vertices(), d);
    return Arrangement(tree, oracle::random_leaves(rng, g.num_vertices(), tree.num_leaves()));
}

// Every move of one vertex to another leaf (occupied or free), re-evaluated in full.
bool no_improving_swap(const GuestGraph& g, const Arrangement& a) {
    const Cost base = objective(g, a);
    std::map<Leaf, Vertex> owner;
    for (Vertex v = 1; v <= g.num_vertices(); ++v) owner[a.leaf_of(v)] = v;
    for (Vertex v = 1; v <= g.num_vertices(); ++v) {
        for (Leaf t = 1; t <= a.tree().num_leaves(); ++t) {
            if (t == a.leaf_of(v)) continue;
            Arrangement b = a;
            if (auto it = owner.find(t); it != owner.end()) b.swap_vertices(v, it->second);
            else b.set_leaf(v, t);
            if (objective(g, b) < base) return false;
        }
    }
    return true;
}

const std::vector<Leaf> kFlipBefore{1, 2, 9, 12, 13, 15, 16, 17, 19, 20};
const std::vector<Leaf> kFlipAfter{1, 2, 9, 12, 16, 18, 13, 14, 19, 20};

}  // namespace

TEST_CASE("normal arrangement") {
    CHECK(objective(oracle::path(50), normal_arrangement(oracle::path(50), 2)) == 190);
    CHECK(objective(oracle::cycle(50), normal_arrangement(oracle::cycle(50), 2)) == 202);
    CHECK(objective(oracle::star(50), normal_arrangement(oracle::star(50), 2)) == 474);
    CHECK(objective(GuestGraph(6, {}), normal_arrangement(GuestGraph(6, {}), 2)) == 0);
    const auto a = normal_arrangement(oracle::path(5), 3);
    CHECK(a.leaves()[4] == 5);
    CHECK(a.tree() == HostTree(3, 2));
}

TEST_CASE("random arrangements") {
    CHECK(objective(GuestGraph(6, {}), random_arrangement_best_of(GuestGraph(6, {}), 2, 1, false, 3)) == 0);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 30; ++i) {
        const Vertex n = 3 + rng() % 20;
        const auto g = oracle::random_graph(rng, n, 0.3);
        const auto full = random_arrangement_best_of(g, n, 5, false, i);
        CHECK(objective(g, full) == 2 * static_cast<Cost>(g.num_edges()));
        const std::uint64_t d = 2 + rng() % 3;
        if (d > n) continue;
        const auto ram = random_arrangement_best_of(g, d, 20, false, i);
        const auto rcam = random_arrangement_best_of(g, d, 20, true, i);
        CHECK(validate_arrangement(ram, g));
        CHECK(validate_arrangement(rcam, g));
        CHECK(is_contiguous(rcam));
        CHECK(random_arrangement_best_of(g, d, 20, true, i) == rcam);
        CHECK(objective(g, random_arrangement_best_of(g, d, 200, false, i)) <= objective(g, ram));
    }
    CHECK_THROWS_AS(random_arrangement_best_of(oracle::path(4), 2, 0, false, 1), std::invalid_argument);
}

TEST_CASE("leaf-driven greedy") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 20; ++i) {
        const Vertex n = 3 + rng() % 15;
        const auto g = oracle::random_graph(rng, n, 0.4);
        for (auto sel : {GreedySelection::max_increase, GreedySelection::min_increase}) {
            const auto a = greedy_leaf_driven(g, n, i, sel);
            CHECK(validate_arrangement(a, g));
            CHECK(objective(g, a) == 2 * static_cast<Cost>(g.num_edges()));
        }
    }
    // With the centre on the first leaf every remaining vertex is interchangeable.
    for (Vertex n : {9u, 20u, 50u}) {
        const auto g = oracle::star(n);
        for (std::uint64_t d : {2u, 3u, 7u}) {
            bool centre_first = false;
            for (std::uint64_t seed = 0; seed < 500 && !centre_first; ++seed) {
                const auto a = greedy_leaf_driven(g, d, seed);
                if (a.leaf_of(1) != 1) continue;
                centre_first = true;
                CHECK(objective(g, a) == star_optimum(n, d));
            }
            CHECK(centre_first);
        }
    }
}

TEST_CASE("search-order greedy") {
    CHECK(objective(oracle::path(50), search_order_greedy(oracle::path(50), 2, SearchOrder::bfs)) == 190);
    CHECK(objective(oracle::cycle(50), search_order_greedy(oracle::cycle(50), 2, SearchOrder::bfs)) == 284);
    CHECK(objective(oracle::star(50), search_order_greedy(oracle::star(50), 2, SearchOrder::bfs)) == 474);
    CHECK(objective(oracle::path(50), search_order_greedy(oracle::path(50), 2, SearchOrder::dfs)) == 190);

    // BFS from vertex 1 of a path visits it in order.
    const auto a = search_order_greedy(oracle::path(6), 2, SearchOrder::bfs, Vertex{1});
    CHECK(a == normal_arrangement(oracle::path(6), 2));

    // Components are laid out one after another, largest first by default.
    const GuestGraph split(5, {{4, 5}, {1, 2}, {2, 3}});
    const auto s = search_order_greedy(split, 5, SearchOrder::dfs);
    CHECK(validate_arrangement(s, split));
    std::set<Leaf> big{s.leaf_of(1), s.leaf_of(2), s.leaf_of(3)};
    CHECK(big == std::set<Leaf>{1, 2, 3});
    const auto r = search_order_greedy(split, 2, SearchOrder::bfs, std::nullopt, ComponentOrder::seeded_random, 5);
    CHECK(validate_arrangement(r, split));
    CHECK(search_order_greedy(split, 2, SearchOrder::bfs, std::nullopt, ComponentOrder::seeded_random, 5) == r);
}

TEST_CASE("construction") {
    const auto fig5 = oracle::counterexample();
    const auto exact = construction(fig5, 2, exhaustive_solver(), 1);
    CHECK(validate_arrangement(exact, fig5));
    CHECK(objective(fig5, exact) == 26);
    CHECK(enumerate_optimal(fig5, 2).value == 24);

    const auto star = oracle::star(50);
    Cost best = std::numeric_limits<Cost>::max();
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        best = std::min(best, objective(star, construction(star, 2, local_search_solver(), seed)));
    CHECK(static_cast<double>(best) <= 1.02 * 474);

    std::mt19937_64 rng(12);
    for (int i = 0; i < 30; ++i) {
        const Vertex n = 2 + rng() % 30;
        const std::uint64_t d = 2 + rng() % 4;
        if (d > n) continue;
        const auto g = oracle::random_graph(rng, n, 0.25);
        const auto a = construction(g, d, local_search_solver(), i);
        CHECK(validate_arrangement(a, g));
        CHECK(a == construction(g, d, local_search_solver(), i));
    }
}

TEST_CASE("construction at d = n - 1 is optimal") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        const Vertex n = 4 + rng() % 5;
        const auto g = oracle::random_graph(rng, n, 0.5);
        const auto a = construction(g, n - 1, local_search_solver(), i);
        CHECK(objective(g, a) == enumerate_optimal(g, n - 1).value);
    }
}

TEST_CASE("construction on a disconnected graph depends on the cut restarts") {
    // Components {1, 4} and {2, 3, 5, 6}: the optimum puts each in its own
    // basic subtree, which needs the exact component as one cut side.
    const GuestGraph g(6, {{1, 4}, {2, 5}, {2, 6}, {3, 5}});
    const Cost opt = enumerate_optimal(g, 5).value;
    CHECK(opt == 8);
    HeuristicParams one;
    HeuristicParams many;
    many.cut_restarts = 10;
    CHECK(run_heuristic("chls", g, 5, 5, one).value == 10);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) CHECK(run_heuristic("chls", g, 5, seed, many).value == opt);
}

TEST_CASE("flip example") {
    const auto path10 = oracle::path(10);
    const HostTree tree(3, 3);
    const Arrangement before(tree, kFlipBefore);
    const Arrangement after(tree, kFlipAfter);
    CHECK(objective(path10, before) == 32);
    CHECK(flip(before, FlipSpec{1, 2, 2, 3}) == after);
    CHECK(objective(path10, after) == 32);
    CHECK(flip(after, FlipSpec{1, 2, 2, 3}) == before);
}

TEST_CASE("flip range checks") {
    const Arrangement a(HostTree(3, 2), {1, 2, 3, 4, 5});
    CHECK_THROWS_AS(flip(a, FlipSpec{2, 1, 1, 2}), std::out_of_range);
    CHECK_THROWS_AS(flip(a, FlipSpec{1, 4, 1, 2}), std::out_of_range);
    CHECK_THROWS_AS(flip(a, FlipSpec{1, 0, 1, 2}), std::out_of_range);
    CHECK_THROWS_AS(flip(a, FlipSpec{0, 1, 2, 2}), std::out_of_range);
    CHECK_THROWS_AS(flip(a, FlipSpec{0, 1, 2, 1}), std::out_of_range);
    CHECK_THROWS_AS(flip(a, FlipSpec{0, 1, 1, 4}), std::out_of_range);
    CHECK_NOTHROW(flip(a, FlipSpec{1, 3, 2, 3}));
}

TEST_CASE("flips preserve the objective and are involutions") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 1000; ++i) {
        const Vertex n = 2 + rng() % 63;
        const std::uint64_t d = 2 + rng() % 4;
        if (d > n) continue;
        const auto g = oracle::random_graph(rng, n, 0.15);
        const auto a = random_arrangement(rng, g, d);
        Rng r(i);
        const auto spec = random_flip(a.tree(), r);
        const auto b = flip(a, spec);
        REQUIRE(validate_arrangement(b, g));
        CHECK(objective(g, b) == objective(g, a));
        CHECK(flip(b, spec) == a);
    }
}

TEST_CASE("random flips are uniform over valid specs") {
    const HostTree tree(3, 3);
    CHECK(flip_count(tree) == 39);
    CHECK(flip_count(HostTree(2, 4)) == 15);
    CHECK(flip_count(HostTree(5, 1)) == 10);
    std::map<std::tuple<std::uint32_t, std::uint64_t, std::uint64_t, std::uint64_t>, int> hits;
    Rng rng(1);
    const int draws = 39 * 2000;
    for (int i = 0; i < draws; ++i) {
        const auto s = random_flip(tree, rng);
        REQUIRE(s.e < 3);
        REQUIRE(s.g >= 1);
        REQUIRE(s.g <= checked_pow(3, s.e));
        REQUIRE(s.l >= 1);
        REQUIRE(s.l < s.r);
        REQUIRE(s.r <= 3);
        ++hits[{s.e, s.g, s.l, s.r}];
    }
    CHECK(hits.size() == 39);
    // Each count is Binomial(draws, 1/39): mean 2000, sd about 44.
    for (const auto& [key, count] : hits) CHECK(std::abs(count - 2000) < 250);
}

TEST_CASE("shift identities") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const Vertex n = 2 + rng() % 30;
        const std::uint64_t d = 2 + rng() % 3;
        if (d > n) continue;
        const auto g = oracle::random_graph(rng, n, 0.3);
        const auto a = random_arrangement(rng, g, d);
        const auto b = a.tree().num_leaves();
        const auto k = rng() % b;
        CHECK(shift(a, 0) == a);
        CHECK(shift(a, b) == a);
        CHECK(shift(shift(a, k), b - k) == a);
        const auto s = shift(a, k);
        CHECK(validate_arrangement(s, g));
        for (Vertex v = 1; v <= n; ++v) CHECK(s.leaf_of(v) == (a.leaf_of(v) - 1 + k) % b + 1);
    }
}

TEST_CASE("shift_values matches explicit shifting") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 150; ++i) {
        const Vertex n = 2 + rng() % 40;
        const std::uint64_t d = 2 + rng() % 5;
        if (d > n) continue;
        const auto g = oracle::random_graph(rng, n, 0.2);
        const auto a = random_arrangement(rng, g, d);
        const auto values = shift_values(g, a);
        REQUIRE(values.size() == a.tree().num_leaves());
        bool ok = true;
        for (std::uint64_t k = 0; k < values.size(); ++k) ok = ok && values[k] == objective(g, shift(a, k));
        CHECK(ok);
    }
}

TEST_CASE("pair exchange") {
    const auto sample = oracle::sample_graph();
    CHECK(objective(sample, pair_exchange(sample, normal_arrangement(sample, 3))) == 20);
    CHECK(objective(oracle::path(50), pair_exchange(oracle::path(50), normal_arrangement(oracle::path(50), 2))) == 190);

    const auto opt = enumerate_optimal(sample, 3);
    LocalSearchStats stats;
    const auto same = pair_exchange(sample, opt.best, {}, &stats);
    CHECK(objective(sample, same) == 20);
    CHECK(same == opt.best);
    CHECK(stats.iterations == 0);

    std::mt19937_64 rng(40);
    for (int i = 0; i < 100; ++i) {
        const Vertex n = 2 + rng() % 19;
        const std::uint64_t d = 2 + rng() % 3;
        if (d > n) continue;
        const auto g = oracle::random_graph(rng, n, 0.35);
        const auto start = random_arrangement(rng, g, d);
        PairExchangeOptions opts;
        opts.distance_table = (i % 2) == 1;
        LocalSearchStats st;
        const auto a = pair_exchange(g, start, opts, &st);
        REQUIRE(validate_arrangement(a, g));
        CHECK(objective(g, a) <= objective(g, start));
        CHECK(objective(g, start) - objective(g, a) >= 2 * static_cast<Cost>(st.iterations));
        CHECK(no_improving_swap(g, a));
        CHECK(pair_exchange(g, start, opts) == a);
    }
}

TEST_CASE("shift-flip") {
    const auto sample = oracle::sample_graph();
    Cost best = std::numeric_limits<Cost>::max();
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        best = std::min(best, objective(sample, shift_flip(sample, normal_arrangement(sample, 3), seed)));
    CHECK(best == 20);

    ShiftFlipOptions one;
    one.stop = 1;
    const auto opt = enumerate_optimal(sample, 3).best;
    CHECK(objective(sample, shift_flip(sample, opt, 3, one)) == 20);

    std::mt19937_64 rng(50);
    for (int i = 0; i < 100; ++i) {
        const Vertex n = 2 + rng() % 30;
        const std::uint64_t d = 2 + rng() % 4;
        if (d > n) continue;
        const auto g = oracle::random_graph(rng, n, 0.3);
        const auto start = random_arrangement(rng, g, d);
        ShiftFlipOptions opts;
        opts.stop = 30;
        opts.accept_equal = (i % 3) != 0;
        LocalSearchStats st;
        const auto a = shift_flip(g, start, i, opts, &st);
        REQUIRE(validate_arrangement(a, g));
        CHECK(objective(g, a) <= objective(g, start));
        CHECK(st.iterations >= 30);
        CHECK(shift_flip(g, start, i, opts) == a);
    }
}

TEST_CASE("combined pair exchange and shift-flip") {
    std::mt19937_64 rng(60);
    for (int i = 0; i < 30; ++i) {
        const Vertex n = 4 + rng() % 25;
        const auto g = oracle::random_graph(rng, n, 0.3);
        const auto start = random_arrangement(rng, g, 2);
        ShiftFlipOptions sf;
        sf.stop = 20;
        const auto a = pair_exchange_shift_flip(g, start, i, 3, sf);
        REQUIRE(validate_arrangement(a, g));
        CHECK(objective(g, a) <= objective(g, pair_exchange(g, start)));
    }
}

TEST_CASE("dispatch") {
    CHECK(heuristic_names().size() == 10);
    CHECK(is_heuristic("pe+sf"));
    CHECK_FALSE(is_heuristic("tabu"));
    CHECK(start_kind_from_string("rcam") == StartKind::rcam);
    CHECK_FALSE(start_kind_from_string("x").has_value());
    CHECK_THROWS_AS(run_heuristic("tabu", oracle::path(4), 2, 1), std::invalid_argument);

    HeuristicParams params;
    params.samples = 30;
    params.shift_flip.stop = 50;
    std::mt19937_64 rng(70);
    for (int i = 0; i < 10; ++i) {
        const Vertex n = 5 + rng() % 25;
        const std::uint64_t d = 2 + rng() % 3;
        const auto g = oracle::random_graph(rng, n, 0.3);
        const auto lower = bound_report(g, d).lower();
        for (const auto& name : heuristic_names()) {
            for (auto start : {StartKind::nam, StartKind::ram, StartKind::rcam}) {
                params.start = start;
                const auto run = run_heuristic(name, g, d, 100 + i, params);
                CHECK(run.name == name);
                CHECK(run.seed == 100 + i);
                REQUIRE(validate_arrangement(run.result, g));
                CHECK(run.value == objective(g, run.result));
                CHECK(run.value >= lower);
                const auto again = run_heuristic(name, g, d, 100 + i, params);
                CHECK_MESSAGE(again.result == run.result, name);
            }
        }
    }
}
