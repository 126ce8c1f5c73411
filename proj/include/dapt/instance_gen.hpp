#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dapt/instance.hpp"
#include "dapt/io.hpp"

namespace dapt {

enum class FamilyKind {
    sample,           // the five-vertex sample graph
    thin,             // sparse random connected graph with exactly m edges
    dense,            // dense random connected graph with exactly m edges
    mesh,             // rows x cols 4-neighbour grid, row-major numbering
    star,             // centre 1 joined to 2..n
    extended_star,    // centre with paths hanging off it
    path,             // 1-2-...-n
    cycle,            // path plus n-1
    regular_tree,     // complete d_tree-ary tree, breadth-first numbering
    random_gnp,       // every pair independently with probability p
    near_complete_d,  // random_gnp hosted at d = n - 1, optimum from a global min cut
};

std::string to_string(FamilyKind f);
std::optional<FamilyKind> family_kind_from_string(std::string_view s);

/// Unset optional fields fall back to per-family defaults:
/// n = 7 (sample 5, path/cycle/star 50, gnp 500), thin m = n + n/10 (7 -> 7,
/// 10 -> 11), dense m = 2/3 of all pairs (10 -> 26), mesh 3 x 3, extended
/// star = the 12-vertex example graph, regular tree d_tree = 2, height = 3.
struct FamilySpec {
    FamilyKind family = FamilyKind::path;
    std::uint64_t d = 2;  // host degree; near_complete_d always uses n - 1
    std::optional<Vertex> n;
    std::optional<std::size_t> m;
    double p = 0.5;
    std::uint64_t d_tree = 2;
    std::uint32_t height = 3;
    Vertex rows = 3;
    Vertex cols = 3;
    std::optional<std::uint32_t> arms;        // extended_star
    std::optional<std::uint32_t> arm_length;  // extended_star
    std::uint64_t seed = 0;
    std::string id;  // empty: derived from family and parameters
};

/// Graph plus metadata (id, family, best-known values for every host degree
/// where one is available). Throws std::invalid_argument for bad parameters.
GraphFile generate_file(const FamilySpec& spec);

/// generate_file() paired with spec.d.
Instance generate(const FamilySpec& spec);

/// Instance for host degree d from a loaded graph file; best_known is taken
/// from the metadata entry for d when present.
Instance make_instance(const GraphFile& file, std::uint64_t d, std::string fallback_id = "custom");

/// fig1_sample (d=3), fig3_ext_star (d=4), fig5_counterexample (d=2),
/// fig7_path10 (d=3). Throws std::invalid_argument for other names.
Instance fixture(std::string_view name);
const std::vector<std::string>& fixture_names();

/// A dapt file (detected by its header) or an edge list; the id defaults to
/// the file stem. `fixture:<name>` loads a fixture instead.
GraphFile load_graph_source(const std::string& source);

enum class GraphFormat { dapt, edge_list };

/// Throws ParseError (with line number) or std::runtime_error if unreadable.
GuestGraph import_graph(const std::filesystem::path& path, GraphFormat format);

/// The random-graph sweep: two graphs (A, B) for each density x in
/// 5, 15, ..., 95 percent, each with its own derived seed.
std::vector<FamilySpec> random_sweep(Vertex n, std::uint64_t d, std::uint64_t seed);

/// 2m + 2 * (global minimum cut): the optimum at d = n - 1, where every edge
/// costs 2 inside a basic subtree and 4 across.
Cost near_complete_optimum(const GuestGraph& g);

} // namespace dapt
