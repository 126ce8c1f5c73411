#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dapt/heuristics.hpp"

namespace dapt {

struct BenchRecord {
    std::string instance;
    std::uint64_t d = 0;
    Vertex n = 0;
    std::size_t m = 0;
    std::string heuristic;
    std::uint64_t seed = 0;
    Cost value = 0;
    Cost degree_bound = 0;
    std::optional<Cost> best_known;
    std::optional<double> runtime_ms;  // empty when timing is disabled
    std::optional<double> density;     // nominal density in percent, from instance metadata

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct BenchFailure {
    std::string instance;
    std::uint64_t d = 0;
    std::string heuristic;
    std::uint64_t seed = 0;
    std::string message;

    friend bool operator==(const BenchFailure&, const BenchFailure&) = default;
};

struct SuiteReport {
    std::vector<BenchRecord> records;   // sorted by (instance, d, heuristic, seed)
    std::vector<BenchFailure> failures;  // same order
};

/// One manifest line: `<instance> <d> <h1,h2,...> <seeds>`.
/// <instance> is a path relative to the manifest (dapt or edge-list file) or
/// `fixture:<name>`. <d> is a number or `n-1`. Heuristics may be `all`.
/// Seeds are a comma list whose items are numbers or ranges `a..b`.
struct ManifestEntry {
    std::string instance;
    std::filesystem::path path;    // resolved; empty for fixtures
    std::optional<std::uint64_t> d;  // empty: n - 1
    std::vector<std::string> heuristics;
    std::vector<std::uint64_t> seeds;
};

struct Manifest {
    std::vector<ManifestEntry> entries;
};

/// Throws ParseError with the offending line number.
Manifest parse_manifest(std::istream& in, const std::filesystem::path& base_dir = {});
Manifest parse_manifest_file(const std::filesystem::path& path);

struct SuiteOptions {
    unsigned jobs = 1;
    HeuristicParams params;
    bool timing = true;
};

/// Runs every (entry, heuristic, seed) job on a pool of `jobs` workers.
/// Record content does not depend on the worker count; runs that throw
/// become failures.
SuiteReport run_suite(const Manifest& manifest, const SuiteOptions& options = {});

enum class QuotientMode {
    standard,  // denominator max(OS, DB) with unknown OS counted as 0
    strict,  // denominator max(OS, DB, 2m)
};

/// Mean over (instance, d) groups of best value / denominator. Throws
/// std::domain_error when a denominator is 0 and std::invalid_argument for
/// no records.
double quality_quotient(std::span<const BenchRecord> records, QuotientMode mode = QuotientMode::standard);

/// Share of (instance, d) groups run by `heuristic` where its best value
/// equals the best of all heuristics and the known optimum. Ties count for
/// every heuristic involved. Throws std::invalid_argument when the heuristic
/// has no records.
double success_factor(std::span<const BenchRecord> records, const std::string& heuristic);

enum class ReportFormat { csv, markdown, plotdata };
std::optional<ReportFormat> report_format_from_string(std::string_view s);

void emit_report(std::ostream& out, const SuiteReport& report, ReportFormat format);

/// Reads what emit_report(csv) writes. Throws ParseError.
SuiteReport parse_csv_report(std::istream& in);

} // namespace dapt
