// dapt: generate instances, run heuristics, bound, enumerate and benchmark.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dapt/bench.hpp"
#include "dapt/bounds.hpp"
#include "dapt/enumerate.hpp"
#include "dapt/heuristics.hpp"
#include "dapt/instance_gen.hpp"
#include "dapt/io.hpp"
#include "dapt/objective.hpp"

namespace {

// Raised for option combinations CLI11 cannot check by itself.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DAPT_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("DAPT_SEED is not a number: '") + env + "'");
    }
    return 1;
}

// Writes through `path`, or stdout when empty or "-".
template <typename F>
void with_output(const std::string& path, F&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write(out);
    if (!out) throw std::runtime_error("write failed for " + path);
}

struct GenArgs {
    std::string family;
    std::string fixture;
    std::optional<dapt::Vertex> n;
    std::optional<std::size_t> m;
    double p = 0.5;
    std::uint64_t dtree = 2;
    std::uint32_t height = 3;
    dapt::Vertex rows = 3;
    dapt::Vertex cols = 3;
    std::optional<std::uint32_t> arms;
    std::optional<std::uint32_t> arm_length;
    std::optional<std::uint64_t> seed;
    std::string id;
    std::string output;
};

int run_gen(const GenArgs& a) {
    dapt::GraphFile file;
    if (!a.fixture.empty()) {
        file = dapt::load_graph_source("fixture:" + a.fixture);
    } else {
        const auto kind = dapt::family_kind_from_string(a.family);
        if (!kind) throw UsageError("unknown family '" + a.family + "'");
        dapt::FamilySpec spec;
        spec.family = *kind;
        spec.n = a.n;
        spec.m = a.m;
        spec.p = a.p;
        spec.d_tree = a.dtree;
        spec.height = a.height;
        spec.rows = a.rows;
        spec.cols = a.cols;
        spec.arms = a.arms;
        spec.arm_length = a.arm_length;
        spec.seed = a.seed ? *a.seed : default_seed();
        spec.id = a.id;
        file = dapt::generate_file(spec);
    }
    with_output(a.output, [&](std::ostream& out) { dapt::write_dapt(out, file.graph, file.meta); });
    return 0;
}

struct SolveArgs {
    std::string instance;
    std::uint64_t d = 0;
    std::vector<std::string> heuristics;
    std::optional<std::uint64_t> seed;
    std::string start = "nam";
    std::string emit;
    std::uint64_t samples = 1000;
    std::string selection = "max";
    std::optional<dapt::Vertex> search_start;
    std::string component_order = "size";
    unsigned cut_restarts = 1;
    std::uint64_t sf_stop = 0;
    bool sf_strict = false;
    unsigned rounds = 5;
    bool table = false;
    bool timing = false;
};

dapt::HeuristicParams heuristic_params(const SolveArgs& a) {
    dapt::HeuristicParams p;
    const auto start = dapt::start_kind_from_string(a.start);
    if (!start) throw UsageError("--start must be nam, ram or rcam");
    p.start = *start;
    p.samples = a.samples;
    p.selection = a.selection == "min" ? dapt::GreedySelection::min_increase : dapt::GreedySelection::max_increase;
    p.search_start = a.search_start;
    p.component_order =
        a.component_order == "random" ? dapt::ComponentOrder::seeded_random : dapt::ComponentOrder::decreasing_size;
    p.cut_restarts = a.cut_restarts;
    p.shift_flip.stop = a.sf_stop;
    p.shift_flip.accept_equal = !a.sf_strict;
    p.rounds = a.rounds;
    p.distance_table = a.table;
    return p;
}

int run_solve(const SolveArgs& a) {
    for (const auto& h : a.heuristics) {
        if (!dapt::is_heuristic(h)) throw UsageError("unknown heuristic '" + h + "'");
    }
    const auto params = heuristic_params(a);
    const auto seed = a.seed ? *a.seed : default_seed();
    const auto file = dapt::load_graph_source(a.instance);
    const auto inst = dapt::make_instance(file, a.d, file.meta.id);

    std::optional<dapt::HeuristicRun> best;
    for (const auto& h : a.heuristics) {
        auto run = dapt::run_heuristic(h, inst.graph(), inst.degree(), seed, params);
        std::cout << run.name << " value=" << run.value << " iterations=" << run.iterations;
        if (a.timing) {
            std::cout << " runtime_ms=" << std::chrono::duration<double, std::milli>(run.runtime).count();
        }
        std::cout << '\n';
        if (!best || run.value < best->value) best = std::move(run);
    }
    if (!a.emit.empty()) {
        with_output(a.emit, [&](std::ostream& out) { dapt::write_arrangement(out, best->result); });
    }
    return 0;
}

int run_bound(const std::string& instance, std::uint64_t d) {
    const auto file = dapt::load_graph_source(instance);
    const auto inst = dapt::make_instance(file, d, file.meta.id);
    const auto r = dapt::bound_report(inst.graph(), d);
    std::cout << "db=" << r.degree_bound << " lower=" << r.lower() << " upper=" << r.trivial_upper << '\n';
    return 0;
}

struct EnumArgs {
    std::string instance;
    std::uint64_t d = 0;
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> time_limit_ms;
    bool no_prune = false;
    std::string emit;
};

int run_enumerate(const EnumArgs& a) {
    const auto file = dapt::load_graph_source(a.instance);
    const auto inst = dapt::make_instance(file, a.d, file.meta.id);
    dapt::EnumOptions opt;
    if (a.budget) opt.max_arrangements = *a.budget;
    if (a.time_limit_ms) opt.time_limit = std::chrono::milliseconds(*a.time_limit_ms);
    opt.symmetry_pruning = opt.bound_pruning = !a.no_prune;
    const auto r = dapt::enumerate_optimal(inst.graph(), inst.degree(), opt);
    std::cout << (r.exhausted ? "optimal=" : "best=") << r.value << " exhausted=" << (r.exhausted ? "true" : "false")
              << '\n'
              << "explored=" << r.explored << " nodes=" << r.nodes << '\n';
    if (!a.emit.empty()) {
        with_output(a.emit, [&](std::ostream& out) { dapt::write_arrangement(out, r.best); });
    }
    return 0;
}

struct BenchArgs {
    std::string manifest;
    unsigned jobs = 1;
    std::string format = "csv";
    std::string output;
    bool no_timing = false;
    std::uint64_t samples = 1000;
    std::uint64_t sf_stop = 0;
};

int run_bench(const BenchArgs& a) {
    const auto format = dapt::report_format_from_string(a.format);
    if (!format) throw UsageError("--format must be csv, markdown or plotdata");
    const auto manifest = dapt::parse_manifest_file(a.manifest);
    dapt::SuiteOptions opt;
    opt.jobs = a.jobs;
    opt.timing = !a.no_timing;
    opt.params.samples = a.samples;
    opt.params.shift_flip.stop = a.sf_stop;
    const auto report = dapt::run_suite(manifest, opt);
    for (const auto& f : report.failures) {
        std::cerr << "failed: " << f.instance << " d=" << f.d << ' ' << f.heuristic << " seed=" << f.seed << ": "
                  << f.message << '\n';
    }
    with_output(a.output, [&](std::ostream& out) { dapt::emit_report(out, report, *format); });
    return 0;
}

int run_metric(std::uint64_t d, std::uint32_t h, dapt::Leaf t, dapt::Leaf j) {
    std::cout << dapt::leaf_distance(t, j, dapt::HostTree(d, h)) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Data arrangement on regular trees: heuristics, bounds and benchmarks"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate an instance file");
    auto* fam = g->add_option("--family", gen.family,
                              "sample|thin|dense|mesh|star|extended_star|path|cycle|regular_tree|random_gnp|"
                              "near_complete_d");
    auto* fix = g->add_option("--fixture", gen.fixture, "fig1_sample|fig3_ext_star|fig5_counterexample|fig7_path10");
    fam->excludes(fix);
    g->add_option("--n", gen.n, "Vertex count");
    g->add_option("--m", gen.m, "Edge count (thin, dense)");
    g->add_option("--p", gen.p, "Edge probability (random_gnp, near_complete_d)")->check(CLI::Range(0.0, 1.0));
    g->add_option("--dtree", gen.dtree, "Branching of the regular tree");
    g->add_option("--height", gen.height, "Height of the regular tree");
    g->add_option("--rows", gen.rows, "Mesh rows");
    g->add_option("--cols", gen.cols, "Mesh columns");
    g->add_option("--arms", gen.arms, "Extended star arm count");
    g->add_option("--arm-length", gen.arm_length, "Extended star arm length");
    g->add_option("--seed", gen.seed, "Seed (default: $DAPT_SEED, else 1)");
    g->add_option("--id", gen.id, "Instance id stored in the file");
    g->add_option("-o,--output", gen.output, "Output file (default stdout)");

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Run heuristics on an instance");
    s->add_option("--instance", solve.instance, "Instance file or fixture:<name>")->required();
    s->add_option("--d", solve.d, "Host tree degree")->required();
    s->add_option("--heuristic", solve.heuristics, "nam,ram,rcam,g2,bfsg,dfsg,chls,pe,sf,pe+sf")
        ->required()
        ->delimiter(',');
    s->add_option("--seed", solve.seed, "Seed (default: $DAPT_SEED, else 1)");
    s->add_option("--start", solve.start, "Start for pe/sf/pe+sf: nam|ram|rcam");
    s->add_option("--emit-arrangement", solve.emit, "Write the best arrangement to this file");
    s->add_option("--samples", solve.samples, "Samples for ram/rcam")->check(CLI::PositiveNumber);
    s->add_option("--selection", solve.selection, "g2 selection: max|min")->check(CLI::IsMember({"max", "min"}));
    s->add_option("--search-start", solve.search_start, "bfsg/dfsg start vertex (default: try all)");
    s->add_option("--component-order", solve.component_order, "size|random")
        ->check(CLI::IsMember({"size", "random"}));
    s->add_option("--cut-restarts", solve.cut_restarts, "chls cut search restarts per size")
        ->check(CLI::PositiveNumber);
    s->add_option("--sf-stop", solve.sf_stop, "sf steps without improvement (default 50*b)");
    s->add_flag("--sf-strict", solve.sf_strict, "sf takes shifts only on strict improvement");
    s->add_option("--rounds", solve.rounds, "pe+sf round limit")->check(CLI::PositiveNumber);
    s->add_flag("--distance-table", solve.table, "Precompute the b x b leaf distance table");
    s->add_flag("--timing", solve.timing, "Print runtimes");

    std::string bound_instance;
    std::uint64_t bound_d = 0;
    auto* b = app.add_subcommand("bound", "Print degree bound and trivial bounds");
    b->add_option("--instance", bound_instance, "Instance file or fixture:<name>")->required();
    b->add_option("--d", bound_d, "Host tree degree")->required();

    EnumArgs en;
    auto* e = app.add_subcommand("enumerate", "Solve a small instance exactly");
    e->add_option("--instance", en.instance, "Instance file or fixture:<name>")->required();
    e->add_option("--d", en.d, "Host tree degree")->required();
    e->add_option("--budget", en.budget, "Maximum complete arrangements to evaluate")->check(CLI::PositiveNumber);
    e->add_option("--time-limit", en.time_limit_ms, "Wall-clock limit in milliseconds");
    e->add_flag("--no-prune", en.no_prune, "Plain enumeration without symmetry or bound pruning");
    e->add_option("--emit-arrangement", en.emit, "Write the best arrangement to this file");

    BenchArgs be;
    auto* bn = app.add_subcommand("bench", "Run a benchmark manifest");
    bn->add_option("--manifest", be.manifest, "Manifest file")->required();
    bn->add_option("--jobs", be.jobs, "Worker threads")->check(CLI::PositiveNumber);
    bn->add_option("--format", be.format, "csv|markdown|plotdata");
    bn->add_option("-o,--output", be.output, "Output file (default stdout)");
    bn->add_flag("--no-timing", be.no_timing, "Leave runtime_ms empty (byte-stable output)");
    bn->add_option("--samples", be.samples, "Samples for ram/rcam")->check(CLI::PositiveNumber);
    bn->add_option("--sf-stop", be.sf_stop, "sf steps without improvement (default 50*b)");

    std::uint64_t md = 0;
    std::uint32_t mh = 0;
    dapt::Leaf mt = 0, mj = 0;
    auto* m = app.add_subcommand("metric", "Distance between two leaves");
    m->set_help_flag("--help", "Print this help message and exit");
    m->add_option("--d", md, "Tree degree")->required();
    m->add_option("--h", mh, "Tree height")->required();
    m->add_option("--t", mt, "First leaf")->required();
    m->add_option("--j", mj, "Second leaf")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*g) {
            if (gen.family.empty() && gen.fixture.empty()) throw UsageError("gen needs --family or --fixture");
            return run_gen(gen);
        }
        if (*s) return run_solve(solve);
        if (*b) return run_bound(bound_instance, bound_d);
        if (*e) return run_enumerate(en);
        if (*bn) return run_bench(be);
        if (*m) return run_metric(md, mh, mt, mj);
    } catch (const UsageError& err) {
        std::cerr << "usage error: " << err.what() << '\n';
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 1;
}
