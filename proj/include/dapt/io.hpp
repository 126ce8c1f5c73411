#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "dapt/arrangement.hpp"
#include "dapt/instance.hpp"

namespace dapt {

/// Optional annotations carried in structured `#` comments of a dapt file:
///
///     # id SC_star50
///     # family SC
///     # density 15
///     # best_known 2 474 proven
///
/// Any other comment is ignored. Readers that do not know these keys still
/// see a valid file.
struct GraphMetadata {
    std::string id;
    std::optional<Family> family;
    std::optional<double> density;
    std::map<std::uint64_t, BestKnown> best_known;  // keyed by tree degree d
};

struct GraphFile {
    GuestGraph graph;
    GraphMetadata meta;
};

/// `dapt <n> <m>` header followed by m lines `<u> <v>` with 1 <= u < v <= n.
GraphFile read_dapt(std::istream& in);
GraphFile read_dapt_file(const std::filesystem::path& path);
void write_dapt(std::ostream& out, const GuestGraph& g, const GraphMetadata& meta = {});
void write_dapt_file(const std::filesystem::path& path, const GuestGraph& g,
                     const GraphMetadata& meta = {});

/// `<u> <v>` per line. Accepted extras: `#`/`%`/`c` comment lines, an optional
/// header (`dapt n m`, `p <word> n m`, or a leading `n m` line when the file
/// then has exactly m edge lines), and DIMACS `e u v` lines. Indices are
/// 1-based unless a 0 appears, in which case the whole file is read 0-based.
/// Duplicate edges collapse; self-loops raise ParseError.
GuestGraph read_edge_list(std::istream& in);

/// Header `arr <n> <d> <h>` then n lines `<vertex> <leaf>`.
void write_arrangement(std::ostream& out, const Arrangement& a);
Arrangement read_arrangement(std::istream& in);

} // namespace dapt
