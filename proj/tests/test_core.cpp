#include <doctest.h>

#include <sstream>

#include "dapt/arrangement.hpp"
#include "dapt/instance.hpp"
#include "dapt/io.hpp"
#include "oracles.hpp"

using namespace dapt;

TEST_CASE("graph normalizes and deduplicates edges") {
    GuestGraph g(4, {{2, 1}, {1, 2}, {3, 4}, {4, 3}, {2, 3}});
    CHECK(g.num_edges() == 3);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
    CHECK(g.degree(2) == 2);
    CHECK(g.has_edge(3, 2));
    CHECK_FALSE(g.has_edge(1, 4));
    std::size_t sum = 0;
    for (Vertex v = 1; v <= 4; ++v) {
        sum += g.degree(v);
        for (Vertex w : g.neighbors(v)) CHECK(g.has_edge(w, v));
    }
    CHECK(sum == 2 * g.num_edges());
}

TEST_CASE("graph rejects self-loops and out-of-range endpoints") {
    CHECK_THROWS_AS(GuestGraph(3, {{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(GuestGraph(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(GuestGraph(3, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("induced subgraph renumbers by position") {
    const auto g = oracle::sample_graph();
    const std::vector<Vertex> keep{2, 4, 5};
    const auto sub = g.induced(keep);
    CHECK(sub.num_vertices() == 3);
    CHECK(sub.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
}

TEST_CASE("validate_arrangement") {
    const auto g = oracle::sample_graph();
    const HostTree t(3, 2);
    CHECK(validate_arrangement(Arrangement(t, {1, 2, 3, 4, 5}), g));
    CHECK_FALSE(validate_arrangement(Arrangement(t, {1, 3, 3, 4, 5}), g));
    CHECK_FALSE(validate_arrangement(Arrangement(t, {1, 2, 3, 4, 10}), g));
    CHECK_FALSE(validate_arrangement(Arrangement(t, {0, 2, 3, 4, 5}), g));
    CHECK_FALSE(validate_arrangement(Arrangement(t, {1, 2, 3, 4}), g));
    CHECK_THROWS_AS(require_valid(Arrangement(t, {1, 3, 3, 4, 5}), g), InvalidArrangement);
}

TEST_CASE("is_contiguous") {
    CHECK(is_contiguous(Arrangement(HostTree(3, 2), {1, 2, 3, 4, 5})));
    CHECK(is_contiguous(Arrangement(HostTree(3, 2), {9, 5, 6, 8, 7})));
    CHECK_FALSE(is_contiguous(Arrangement(HostTree(4, 2), {1, 2, 3, 5, 6, 7, 9, 10, 11, 13, 14, 15})));
    CHECK(is_contiguous(Arrangement(HostTree(3, 2), {9, 8, 7, 6, 5, 4, 3, 2, 1})));
}

TEST_CASE("instance degree range") {
    CHECK_NOTHROW(Instance("x", oracle::path(5), 5));
    CHECK_THROWS_AS(Instance("x", oracle::path(5), 6), std::domain_error);
    CHECK_THROWS_AS(Instance("x", oracle::path(5), 1), std::domain_error);
    CHECK_THROWS_AS(Instance("x", GuestGraph(1, {}), 2), std::domain_error);
}

TEST_CASE("dapt format round trip preserves the graph and metadata") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto g = oracle::random_graph(rng, 2 + i, 0.3);
        GraphMetadata meta;
        meta.id = "g" + std::to_string(i);
        meta.family = Family::rg;
        meta.density = 30;
        meta.best_known[2] = BestKnown{42, Provenance::heuristic, "note text"};
        std::stringstream ss;
        write_dapt(ss, g, meta);
        const auto back = read_dapt(ss);
        CHECK(back.graph == g);
        CHECK(back.meta.id == meta.id);
        CHECK(back.meta.family == meta.family);
        CHECK(back.meta.density == meta.density);
        CHECK(back.meta.best_known == meta.best_known);
    }
}

TEST_CASE("dapt parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_dapt(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("dapt 3 2\n1 2\n2 x\n") == 3);
    CHECK(line_of("# c\ndapt 3 2\n1 2\n") == 3);
    CHECK(line_of("dapt 3 1\n1 1\n") == 2);
    CHECK(line_of("dapt 3 1\n1 4\n") == 2);
    CHECK(line_of("graph 3 1\n") == 1);
}

TEST_CASE("edge list variants") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
    };
    CHECK(parse("1 2\n2 3\n") == oracle::path(3));
    CHECK(parse("% comment\n0 1\n1 2\n") == oracle::path(3));
    CHECK(parse("p edge 4 2\ne 1 2\ne 2 3\n") == GuestGraph(4, {{1, 2}, {2, 3}}));
    CHECK(parse("5 2\n1 2\n2 3\n") == GuestGraph(5, {{1, 2}, {2, 3}}));
    CHECK(parse("1 2 0.5\n2 3 7\n") == oracle::path(3));
    CHECK(parse("1 2\n2 1\n") == oracle::path(2));
    CHECK_THROWS_AS(parse("1 2\n3 3\n"), ParseError);
}

TEST_CASE("arrangement file round trip") {
    const Arrangement a(HostTree(3, 2), {3, 5, 4, 2, 1});
    std::stringstream ss;
    write_arrangement(ss, a);
    CHECK(ss.str() == "arr 5 3 2\n1 3\n2 5\n3 4\n4 2\n5 1\n");
    CHECK(read_arrangement(ss) == a);
}
