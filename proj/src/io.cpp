#include "dapt/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace dapt {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    for (std::string tok; is >> tok;) {
        out.push_back(tok);
    }
    return out;
}

template <typename T>
bool parse_number(const std::string& tok, T& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

template <typename T>
T number_or_throw(const std::string& tok, std::size_t line, const char* what) {
    T value{};
    if (!parse_number(tok, value)) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
    return value;
}

// Strips a trailing `#` comment; returns false for lines with no content.
bool content(std::string& line) {
    if (auto pos = line.find('#'); pos != std::string::npos) {
        line.erase(pos);
    }
    return line.find_first_not_of(" \t\r") != std::string::npos;
}

void read_metadata(const std::string& comment, std::size_t line_no, GraphMetadata& meta) {
    auto tok = split_ws(comment);
    if (tok.size() < 2) {
        return;
    }
    if (tok[0] == "id") {
        meta.id = tok[1];
    } else if (tok[0] == "family") {
        try {
            meta.family = family_from_string(tok[1]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    } else if (tok[0] == "density") {
        try {
            meta.density = std::stod(tok[1]);
        } catch (const std::exception&) {
            throw ParseError(line_no, "bad density '" + tok[1] + "'");
        }
    } else if (tok[0] == "best_known" && tok.size() >= 4) {
        BestKnown bk;
        auto d = number_or_throw<std::uint64_t>(tok[1], line_no, "degree");
        bk.value = number_or_throw<Cost>(tok[2], line_no, "objective value");
        if (tok[3] == "proven") {
            bk.provenance = Provenance::proven;
        } else if (tok[3] == "heuristic") {
            bk.provenance = Provenance::heuristic;
        } else {
            throw ParseError(line_no, "best_known provenance must be proven or heuristic");
        }
        for (std::size_t i = 4; i < tok.size(); ++i) {
            bk.note += (i > 4 ? " " : "") + tok[i];
        }
        meta.best_known[d] = bk;
    }
}

Edge parse_edge(const std::string& a, const std::string& b, std::size_t line_no, Vertex n) {
    auto u = number_or_throw<Vertex>(a, line_no, "vertex index");
    auto v = number_or_throw<Vertex>(b, line_no, "vertex index");
    if (u == v) {
        throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    }
    if (u < 1 || v < 1 || u > n || v > n) {
        throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(n));
    }
    return {u, v};
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return in;
}

} // namespace

GraphFile read_dapt(std::istream& in) {
    GraphFile out;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    Vertex n = 0;
    std::size_t m = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) {
            read_metadata(line.substr(pos + 1), line_no, out.meta);
        }
        if (!content(line)) {
            continue;
        }
        auto tok = split_ws(line);
        if (!have_header) {
            if (tok.size() != 3 || tok[0] != "dapt") {
                throw ParseError(line_no, "expected header 'dapt <n> <m>'");
            }
            n = number_or_throw<Vertex>(tok[1], line_no, "vertex count");
            m = number_or_throw<std::size_t>(tok[2], line_no, "edge count");
            if (n < 1) {
                throw ParseError(line_no, "vertex count must be positive");
            }
            have_header = true;
            continue;
        }
        if (tok.size() != 2) {
            throw ParseError(line_no, "expected '<u> <v>'");
        }
        if (edges.size() == m) {
            throw ParseError(line_no, "more edge lines than the header's m=" + std::to_string(m));
        }
        edges.push_back(parse_edge(tok[0], tok[1], line_no, n));
    }
    if (!have_header) {
        throw ParseError(line_no, "missing 'dapt <n> <m>' header");
    }
    if (edges.size() != m) {
        throw ParseError(line_no, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    }
    out.graph = GuestGraph(n, std::move(edges));
    return out;
}

GraphFile read_dapt_file(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return read_dapt(in);
}

void write_dapt(std::ostream& out, const GuestGraph& g, const GraphMetadata& meta) {
    if (!meta.id.empty()) {
        out << "# id " << meta.id << '\n';
    }
    if (meta.family) {
        out << "# family " << to_string(*meta.family) << '\n';
    }
    if (meta.density) {
        out << "# density " << *meta.density << '\n';
    }
    for (const auto& [d, bk] : meta.best_known) {
        out << "# best_known " << d << ' ' << bk.value << ' '
            << (bk.provenance == Provenance::proven ? "proven" : "heuristic");
        if (!bk.note.empty()) {
            out << ' ' << bk.note;
        }
        out << '\n';
    }
    out << "dapt " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

void write_dapt_file(const std::filesystem::path& path, const GuestGraph& g, const GraphMetadata& meta) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write_dapt(out, g, meta);
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

GuestGraph read_edge_list(std::istream& in) {
    struct RawEdge {
        std::uint64_t u, v;
        std::size_t line;
    };
    std::vector<RawEdge> raw;
    std::optional<std::uint64_t> header_n;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> leading_pair;
    std::size_t leading_line = 0;
    std::string line;
    std::size_t line_no = 0;
    bool first = true;

    while (std::getline(in, line)) {
        ++line_no;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0][0] == '#' || tok[0][0] == '%' || tok[0] == "c") {
            continue;
        }
        const bool was_first = first;
        first = false;
        if (was_first && tok.size() == 3 && tok[0] == "dapt") {
            header_n = number_or_throw<std::uint64_t>(tok[1], line_no, "vertex count");
            continue;
        }
        if (was_first && tok.size() == 4 && tok[0] == "p") {
            header_n = number_or_throw<std::uint64_t>(tok[2], line_no, "vertex count");
            continue;
        }
        if (tok.size() == 3 && tok[0] == "e") {
            tok.erase(tok.begin());
        }
        if (tok.size() < 2) {
            throw ParseError(line_no, "expected '<u> <v>'");
        }
        // Trailing columns (weights) are ignored.
        RawEdge e{number_or_throw<std::uint64_t>(tok[0], line_no, "vertex index"),
                  number_or_throw<std::uint64_t>(tok[1], line_no, "vertex index"), line_no};
        if (was_first) {
            leading_pair = std::make_pair(e.u, e.v);
            leading_line = line_no;
        }
        raw.push_back(e);
    }

    // A leading `n m` line is a header when exactly m edge lines follow it.
    if (leading_pair && !raw.empty() && raw.size() - 1 == leading_pair->second &&
        raw.front().line == leading_line) {
        bool plausible = true;
        for (std::size_t i = 1; i < raw.size(); ++i) {
            plausible = plausible && std::max(raw[i].u, raw[i].v) <= leading_pair->first;
        }
        if (plausible) {
            header_n = leading_pair->first;
            raw.erase(raw.begin());
        }
    }

    bool zero_based = false;
    std::uint64_t max_index = 0;
    for (const auto& e : raw) {
        zero_based = zero_based || e.u == 0 || e.v == 0;
        max_index = std::max({max_index, e.u, e.v});
    }
    const std::uint64_t shift = zero_based ? 1 : 0;
    std::uint64_t n = header_n.value_or(max_index + shift);
    if (n == 0) {
        throw ParseError(line_no, "empty edge list");
    }
    if (n > std::numeric_limits<Vertex>::max()) {
        throw ParseError(line_no, "too many vertices");
    }
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw) {
        const auto u = e.u + shift;
        const auto v = e.v + shift;
        if (u == v) {
            throw ParseError(e.line, "self-loop at vertex " + std::to_string(e.u));
        }
        if (u > n || v > n) {
            throw ParseError(e.line, "vertex index exceeds header vertex count " + std::to_string(n));
        }
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return GuestGraph(static_cast<Vertex>(n), std::move(edges));
}

void write_arrangement(std::ostream& out, const Arrangement& a) {
    out << "arr " << a.size() << ' ' << a.tree().degree() << ' ' << a.tree().height() << '\n';
    for (Vertex v = 1; v <= a.size(); ++v) {
        out << v << ' ' << a.leaf_of(v) << '\n';
    }
}

Arrangement read_arrangement(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<HostTree> tree;
    Vertex n = 0;
    std::vector<Leaf> leaves;
    std::vector<bool> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (!content(line)) {
            continue;
        }
        auto tok = split_ws(line);
        if (!tree) {
            if (tok.size() != 4 || tok[0] != "arr") {
                throw ParseError(line_no, "expected header 'arr <n> <d> <h>'");
            }
            n = number_or_throw<Vertex>(tok[1], line_no, "vertex count");
            auto d = number_or_throw<std::uint64_t>(tok[2], line_no, "degree");
            auto h = number_or_throw<std::uint32_t>(tok[3], line_no, "height");
            try {
                tree = HostTree(d, h);
            } catch (const std::exception& e) {
                throw ParseError(line_no, e.what());
            }
            leaves.assign(n, 0);
            seen.assign(static_cast<std::size_t>(n) + 1, false);
            continue;
        }
        if (tok.size() != 2) {
            throw ParseError(line_no, "expected '<vertex> <leaf>'");
        }
        auto v = number_or_throw<Vertex>(tok[0], line_no, "vertex");
        auto leaf = number_or_throw<Leaf>(tok[1], line_no, "leaf");
        if (v < 1 || v > n || seen[v]) {
            throw ParseError(line_no, "vertex out of range or repeated");
        }
        seen[v] = true;
        leaves[v - 1] = leaf;
    }
    if (!tree) {
        throw ParseError(line_no, "missing 'arr' header");
    }
    for (Vertex v = 1; v <= n; ++v) {
        if (!seen[v]) {
            throw ParseError(line_no, "no leaf given for vertex " + std::to_string(v));
        }
    }
    return Arrangement(*tree, std::move(leaves));
}

} // namespace dapt
