#include "dapt/instance_gen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/stoer_wagner_min_cut.hpp>

#include "dapt/bounds.hpp"
#include "dapt/rng.hpp"
#include "dapt/tree.hpp"

namespace dapt {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 11> kFamilyNames{{
    {FamilyKind::sample, "sample"},
    {FamilyKind::thin, "thin"},
    {FamilyKind::dense, "dense"},
    {FamilyKind::mesh, "mesh"},
    {FamilyKind::star, "star"},
    {FamilyKind::extended_star, "extended_star"},
    {FamilyKind::path, "path"},
    {FamilyKind::cycle, "cycle"},
    {FamilyKind::regular_tree, "regular_tree"},
    {FamilyKind::random_gnp, "random_gnp"},
    {FamilyKind::near_complete_d, "near_complete_d"},
}};

// Known optima keyed by (n, d).
const std::map<std::pair<Vertex, std::uint64_t>, Cost> kPathOptima{
    {{50, 2}, 190}, {{500, 2}, 1982}, {{1000, 2}, 3980},
    {{50, 7}, 114}, {{500, 7}, 1162}, {{1000, 7}, 2326},
};
const std::map<std::pair<Vertex, std::uint64_t>, Cost> kCycleOptima{
    {{50, 2}, 202}, {{500, 2}, 2000}, {{1000, 2}, 4000},
    {{50, 7}, 120}, {{500, 7}, 1170}, {{1000, 7}, 2334},
};
// Keyed by (tree degree, tree height, host degree).
const std::map<std::tuple<std::uint64_t, std::uint32_t, std::uint64_t>, Cost> kTreeOptima{
    {{2, 8, 2}, 2434},  {{2, 9, 2}, 4904},  {{2, 10, 2}, 9850}, {{2, 11, 2}, 19744},
    {{2, 12, 2}, 39538}, {{3, 5, 3}, 1296}, {{3, 6, 3}, 3926},  {{4, 4, 4}, 1058},
    {{4, 5, 4}, 4272},  {{8, 3, 8}, 1472},
};
// 3 x 3 grid, by host degree.
const std::map<std::uint64_t, Cost> kMesh9Optima{{2, 54}, {3, 36}, {4, 34}};

const std::vector<Edge> kSampleEdges{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 4}, {2, 4}};
const std::vector<Edge> kExtStarEdges{{1, 2}, {2, 3}, {1, 4}, {4, 5}, {5, 6}, {1, 7},
                                      {7, 8}, {8, 9}, {1, 10}, {10, 11}, {11, 12}};
const std::vector<Edge> kCounterexampleEdges{{1, 2}, {1, 3}, {1, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}};

BestKnown proven(Cost value, std::string note) { return BestKnown{value, Provenance::proven, std::move(note)}; }

double uniform01(Rng& rng) { return static_cast<double>(rng.next() >> 11) * 0x1.0p-53; }

std::string percent(double p) {
    const long x = std::lround(p * 100);
    return std::to_string(x);
}

GuestGraph gnp(Vertex n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            if (uniform01(rng) < p) edges.push_back({u, v});
        }
    }
    return GuestGraph(n, std::move(edges));
}

// Random graph with exactly m edges; connected whenever m >= n - 1.
GuestGraph exact_edges(Vertex n, std::size_t m, std::uint64_t seed) {
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (m > pairs) {
        throw std::invalid_argument("m = " + std::to_string(m) + " exceeds the " + std::to_string(pairs) +
                                    " vertex pairs");
    }
    Rng rng(seed);
    std::vector<bool> taken(static_cast<std::size_t>(n) * n, false);
    auto key = [n](Vertex u, Vertex v) { return static_cast<std::size_t>(std::min(u, v) - 1) * n + (std::max(u, v) - 1); };
    std::vector<Edge> edges;
    if (m + 1 >= n) {
        std::vector<Vertex> order(n);
        for (Vertex v = 1; v <= n; ++v) order[v - 1] = v;
        rng.shuffle(std::span<Vertex>(order));
        for (Vertex i = 1; i < n; ++i) {
            const Vertex u = order[i];
            const Vertex w = order[rng.below(i)];
            edges.push_back({u, w});
            taken[key(u, w)] = true;
        }
    }
    std::vector<Edge> rest;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            if (!taken[key(u, v)]) rest.push_back({u, v});
        }
    }
    rng.shuffle(std::span<Edge>(rest));
    for (std::size_t i = 0; edges.size() < m; ++i) edges.push_back(rest[i]);
    return GuestGraph(n, std::move(edges));
}

GuestGraph grid(Vertex rows, Vertex cols) {
    if (rows < 1 || cols < 1 || rows * cols < 2) {
        throw std::invalid_argument("mesh needs at least two cells");
    }
    std::vector<Edge> edges;
    auto id = [cols](Vertex r, Vertex c) { return r * cols + c + 1; };
    for (Vertex r = 0; r < rows; ++r) {
        for (Vertex c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
        }
    }
    return GuestGraph(rows * cols, std::move(edges));
}

// Children of vertex i are (i-1)k+2 .. ik+1.
GuestGraph complete_tree(std::uint64_t k, std::uint32_t height) {
    if (k < 2 || height < 1) {
        throw std::invalid_argument("regular tree needs degree >= 2 and height >= 1");
    }
    const std::uint64_t n = (checked_pow(k, height + 1) - 1) / (k - 1);
    if (n > std::numeric_limits<Vertex>::max()) {
        throw std::invalid_argument("regular tree too large");
    }
    std::vector<Edge> edges;
    for (std::uint64_t c = 2; c <= n; ++c) {
        edges.push_back({static_cast<Vertex>((c - 2) / k + 1), static_cast<Vertex>(c)});
    }
    return GuestGraph(static_cast<Vertex>(n), std::move(edges));
}

Vertex need_n(const FamilySpec& s, Vertex fallback, Vertex minimum) {
    const Vertex n = s.n.value_or(fallback);
    if (n < minimum) {
        throw std::invalid_argument(to_string(s.family) + " needs n >= " + std::to_string(minimum));
    }
    return n;
}

bool connected(const GuestGraph& g) {
    const Vertex n = g.num_vertices();
    std::vector<bool> seen(n + 1, false);
    std::vector<Vertex> stack{1};
    seen[1] = true;
    Vertex count = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

} // namespace

std::string to_string(FamilyKind f) {
    for (const auto& [kind, name] : kFamilyNames) {
        if (kind == f) return std::string(name);
    }
    return "unknown";
}

std::optional<FamilyKind> family_kind_from_string(std::string_view s) {
    for (const auto& [kind, name] : kFamilyNames) {
        if (name == s) return kind;
    }
    return std::nullopt;
}

Cost near_complete_optimum(const GuestGraph& g) {
    const Vertex n = g.num_vertices();
    if (n < 3) {
        throw std::domain_error("d = n - 1 needs at least 3 vertices");
    }
    const auto m = static_cast<Cost>(g.num_edges());
    if (!connected(g)) return 2 * m;
    using Weighted = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                           boost::property<boost::edge_weight_t, int>>;
    Weighted w(n);
    for (const auto& e : g.edges()) {
        boost::add_edge(e.u - 1, e.v - 1, 1, w);
    }
    const int cut = boost::stoer_wagner_min_cut(w, boost::get(boost::edge_weight, w));
    return 2 * m + 2 * static_cast<Cost>(cut);
}

GraphFile generate_file(const FamilySpec& s) {
    GraphFile out;
    auto& meta = out.meta;
    std::string id;
    switch (s.family) {
    case FamilyKind::sample:
        out.graph = GuestGraph(5, kSampleEdges);
        meta.family = Family::ce;
        meta.best_known[3] = proven(20, "enumeration");
        id = "CE_sample";
        break;
    case FamilyKind::thin:
    case FamilyKind::dense: {
        const Vertex n = need_n(s, 7, 2);
        const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
        std::size_t m;
        if (s.m) {
            m = *s.m;
        } else if (s.family == FamilyKind::thin) {
            m = n + n / 10;
        } else {
            m = n == 10 ? 26 : (2 * pairs + 2) / 3;
        }
        out.graph = exact_edges(n, m, s.seed);
        meta.family = Family::ce;
        id = std::string("CE_") + (s.family == FamilyKind::thin ? "thin" : "dense") + std::to_string(n);
        break;
    }
    case FamilyKind::mesh:
        out.graph = grid(s.rows, s.cols);
        meta.family = Family::ce;
        if (s.rows == 3 && s.cols == 3) {
            for (const auto& [d, v] : kMesh9Optima) meta.best_known[d] = proven(v, "enumeration");
        }
        id = "CE_mesh" + std::to_string(s.rows * s.cols);
        break;
    case FamilyKind::star: {
        const Vertex n = need_n(s, 50, 2);
        std::vector<Edge> edges;
        for (Vertex v = 2; v <= n; ++v) edges.push_back({1, v});
        out.graph = GuestGraph(n, std::move(edges));
        meta.family = Family::sc;
        for (std::uint64_t d = 2; d <= std::min<std::uint64_t>(n, 16); ++d) {
            meta.best_known[d] = proven(star_optimum(n, d), "star formula");
        }
        meta.best_known[n] = proven(star_optimum(n, n), "star formula");
        id = "SC_star" + std::to_string(n);
        break;
    }
    case FamilyKind::extended_star:
        if (!s.arms && !s.arm_length) {
            out.graph = GuestGraph(12, kExtStarEdges);
            meta.best_known[4] = proven(28, "enumeration");
            id = "SC_extStar";
        } else {
            const std::uint32_t arms = s.arms.value_or(4);
            const std::uint32_t len = s.arm_length.value_or(3);
            if (arms < 1 || len < 1) {
                throw std::invalid_argument("extended star needs arms >= 1 and arm_length >= 1");
            }
            std::vector<Edge> edges;
            Vertex next = 2;
            for (std::uint32_t a = 0; a < arms; ++a) {
                Vertex prev = 1;
                for (std::uint32_t i = 0; i < len; ++i, ++next) {
                    edges.push_back({prev, next});
                    prev = next;
                }
            }
            out.graph = GuestGraph(next - 1, std::move(edges));
            id = "SC_extStar" + std::to_string(arms) + "x" + std::to_string(len);
        }
        meta.family = Family::sc;
        break;
    case FamilyKind::path:
    case FamilyKind::cycle: {
        const bool cyc = s.family == FamilyKind::cycle;
        const Vertex n = need_n(s, 50, cyc ? 3 : 2);
        std::vector<Edge> edges;
        for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
        if (cyc) edges.push_back({1, n});
        out.graph = GuestGraph(n, std::move(edges));
        meta.family = Family::sc;
        for (const auto& [key, v] : cyc ? kCycleOptima : kPathOptima) {
            if (key.first == n) meta.best_known[key.second] = proven(v, "reference value");
        }
        id = (cyc ? "SC_simpleCycle" : "SC_path") + std::to_string(n);
        break;
    }
    case FamilyKind::regular_tree:
        out.graph = complete_tree(s.d_tree, s.height);
        meta.family = Family::sc;
        for (const auto& [key, v] : kTreeOptima) {
            if (std::get<0>(key) == s.d_tree && std::get<1>(key) == s.height) {
                meta.best_known[std::get<2>(key)] = proven(v, "reference value");
            }
        }
        id = "SC_treeDG" + std::to_string(s.d_tree) + "H" + std::to_string(s.height);
        break;
    case FamilyKind::random_gnp: {
        const Vertex n = need_n(s, 500, 2);
        out.graph = gnp(n, s.p, s.seed);
        meta.family = Family::rg;
        meta.density = s.p * 100;
        id = "RG_random" + percent(s.p) + "_n" + std::to_string(n) + "_s" + std::to_string(s.seed);
        break;
    }
    case FamilyKind::near_complete_d: {
        const Vertex n = need_n(s, 500, 3);
        out.graph = gnp(n, s.p, s.seed);
        meta.family = Family::sc;
        meta.density = s.p * 100;
        meta.best_known[n - 1] = proven(near_complete_optimum(out.graph), "global min cut");
        id = "SC_random" + percent(s.p) + "_n" + std::to_string(n) + "_s" + std::to_string(s.seed);
        break;
    }
    }
    meta.id = s.id.empty() ? id : s.id;
    return out;
}

Instance make_instance(const GraphFile& file, std::uint64_t d, std::string fallback_id) {
    std::optional<BestKnown> bk;
    if (auto it = file.meta.best_known.find(d); it != file.meta.best_known.end()) bk = it->second;
    return Instance(file.meta.id.empty() ? std::move(fallback_id) : file.meta.id, file.graph, d,
                    file.meta.family.value_or(Family::custom), std::move(bk));
}

Instance generate(const FamilySpec& spec) {
    auto file = generate_file(spec);
    const std::uint64_t d = spec.family == FamilyKind::near_complete_d ? file.graph.num_vertices() - 1 : spec.d;
    return make_instance(file, d);
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"fig1_sample", "fig3_ext_star", "fig5_counterexample",
                                                "fig7_path10"};
    return names;
}

Instance fixture(std::string_view name) {
    if (name == "fig1_sample") {
        return Instance("fig1_sample", GuestGraph(5, kSampleEdges), 3, Family::ce, proven(20, "enumeration"));
    }
    if (name == "fig3_ext_star") {
        return Instance("fig3_ext_star", GuestGraph(12, kExtStarEdges), 4, Family::sc, proven(28, "enumeration"));
    }
    if (name == "fig5_counterexample") {
        return Instance("fig5_counterexample", GuestGraph(7, kCounterexampleEdges), 2, Family::ce,
                        proven(24, "enumeration"));
    }
    if (name == "fig7_path10") {
        std::vector<Edge> edges;
        for (Vertex v = 1; v < 10; ++v) edges.push_back({v, v + 1});
        return Instance("fig7_path10", GuestGraph(10, std::move(edges)), 3, Family::custom);
    }
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

GuestGraph import_graph(const std::filesystem::path& path, GraphFormat format) {
    if (format == GraphFormat::dapt) {
        return read_dapt_file(path).graph;
    }
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_edge_list(in);
}

GraphFile load_graph_source(const std::string& source) {
    GraphFile file;
    if (source.starts_with("fixture:")) {
        const auto fx = fixture(std::string_view(source).substr(8));
        file.graph = fx.graph();
        file.meta.id = fx.id();
        file.meta.family = fx.family();
        if (fx.best_known()) file.meta.best_known[fx.degree()] = *fx.best_known();
        return file;
    }
    const std::filesystem::path path(source);
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::string first;
    while (in >> first && first[0] == '#') {
        std::string rest;
        std::getline(in, rest);
    }
    in.clear();
    in.seekg(0);
    if (first == "dapt") {
        file = read_dapt(in);
    } else {
        file.graph = read_edge_list(in);
    }
    if (file.meta.id.empty()) file.meta.id = path.stem().string();
    return file;
}

std::vector<FamilySpec> random_sweep(Vertex n, std::uint64_t d, std::uint64_t seed) {
    std::vector<FamilySpec> out;
    for (int x = 5; x <= 95; x += 10) {
        for (char tag : {'A', 'B'}) {
            FamilySpec s;
            s.family = FamilyKind::random_gnp;
            s.d = d;
            s.n = n;
            s.p = x / 100.0;
            s.seed = derive_seed(seed, static_cast<std::uint64_t>(x) * 2 + (tag == 'B'));
            s.id = std::string("RG_random") + tag + std::to_string(x);
            out.push_back(s);
        }
    }
    return out;
}

} // namespace dapt
