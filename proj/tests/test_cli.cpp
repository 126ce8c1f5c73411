#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "dapt/instance_gen.hpp"
#include "dapt/io.hpp"
#include "dapt/objective.hpp"

namespace {

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " '" DAPT_CLI_PATH "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch() {
    const auto dir = std::filesystem::temp_directory_path() / "dapt_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string fig1() {
    const auto path = scratch() / "fig1.dapt";
    const auto r = run("gen --fixture fig1_sample -o " + path.string());
    REQUIRE(r.code == 0);
    return path.string();
}

}  // namespace

TEST_CASE("bound, metric and enumerate output") {
    const auto f = fig1();
    CHECK(run("bound --instance " + f + " --d 3").out == "db=18 lower=18 upper=28\n");
    CHECK(run("metric --d 3 --h 2 --t 1 --j 4").out == "4\n");
    CHECK(run("metric --d 2 --h 6 --t 1 --j 50").out == "12\n");
    const auto e = run("enumerate --instance " + f + " --d 3");
    CHECK(e.code == 0);
    CHECK(e.out.starts_with("optimal=20 exhausted=true\n"));
    const auto b = run("enumerate --instance fixture:fig5_counterexample --d 2 --budget 1 --no-prune");
    CHECK(b.out.starts_with("best="));
    CHECK(b.out.find("exhausted=false") != std::string::npos);
}

TEST_CASE("exit codes") {
    const auto f = fig1();
    CHECK(run("").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("solve --instance " + f + " --d 3 --heuristic tabu").code == 1);
    CHECK(run("solve --instance " + f + " --heuristic nam").code == 1);
    CHECK(run("metric --d 3 --h 2 --t 1 --j 1").code == 2);
    CHECK(run("solve --instance /nonexistent.dapt --d 3 --heuristic nam").code == 2);
    CHECK(run("bench --manifest /nonexistent.txt").code == 2);
    CHECK(run("solve --instance " + f + " --d 3 --heuristic nam").code == 0);
}

TEST_CASE("emitted arrangements re-evaluate to the printed value") {
    const auto f = fig1();
    const auto arr = scratch() / "best.arr";
    const auto r = run("solve --instance " + f + " --d 3 --heuristic nam,pe,sf --seed 4 --emit-arrangement " +
                       arr.string());
    REQUIRE(r.code == 0);
    long best = -1;
    std::istringstream lines(r.out);
    for (std::string line; std::getline(lines, line);) {
        const auto pos = line.find("value=");
        REQUIRE(pos != std::string::npos);
        const long v = std::stol(line.substr(pos + 6));
        if (best < 0 || v < best) best = v;
    }
    std::ifstream in(arr);
    const auto a = dapt::read_arrangement(in);
    const auto g = dapt::read_dapt_file(f).graph;
    CHECK(dapt::objective(g, a) == best);
}

TEST_CASE("runs are reproducible and honour DAPT_SEED") {
    const auto f = fig1();
    const std::string args = "solve --instance " + f + " --d 2 --heuristic ram,g2,chls,sf";
    const auto a = run(args + " --seed 11");
    CHECK(a.code == 0);
    CHECK(run(args + " --seed 11").out == a.out);
    CHECK(run(args, "DAPT_SEED=11").out == a.out);
    CHECK(run(args, "DAPT_SEED=12").out == run(args + " --seed 12").out);

    const auto gen = scratch() / "gnp.dapt";
    const auto gen2 = scratch() / "gnp2.dapt";
    run("gen --family random_gnp --n 30 --p 0.3 --seed 5 -o " + gen.string());
    run("gen --family random_gnp --n 30 --p 0.3 --seed 5 -o " + gen2.string());
    CHECK(dapt::read_dapt_file(gen).graph == dapt::read_dapt_file(gen2).graph);
    CHECK(dapt::read_dapt_file(gen).graph.num_vertices() == 30);
}

TEST_CASE("bench verb") {
    const auto dir = scratch();
    std::ofstream(dir / "m.txt") << "fixture:fig1_sample 3 nam,pe 1,2\nfixture:fig3_ext_star 4 bfsg 1\n";
    const auto one = run("bench --manifest " + (dir / "m.txt").string() + " --jobs 1 --no-timing");
    const auto four = run("bench --manifest " + (dir / "m.txt").string() + " --jobs 4 --no-timing");
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
    CHECK(one.out.starts_with("instance,d,n,m,heuristic,seed,value,db,best_known,runtime_ms\n"));
    CHECK(std::count(one.out.begin(), one.out.end(), '\n') == 6);
    const auto md = run("bench --manifest " + (dir / "m.txt").string() + " --format markdown");
    CHECK(md.out.find("**20**") != std::string::npos);
}
