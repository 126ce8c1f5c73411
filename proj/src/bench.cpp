#include "dapt/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "dapt/bounds.hpp"
#include "dapt/instance_gen.hpp"
#include "dapt/io.hpp"

namespace dapt {

namespace {

constexpr const char* kCsvHeader = "instance,d,n,m,heuristic,seed,value,db,best_known,runtime_ms";

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

std::uint64_t parse_u64(const std::string& tok, std::size_t line, const char* what) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        if (tok.empty() || tok[0] == '-' || tok[0] == '+') throw std::invalid_argument(tok);
        v = std::stoull(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size() || tok.empty()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
    return v;
}

std::vector<std::uint64_t> parse_seeds(const std::string& tok, std::size_t line) {
    std::vector<std::uint64_t> seeds;
    for (const auto& item : split(tok, ',')) {
        if (auto dots = item.find(".."); dots != std::string::npos) {
            const auto lo = parse_u64(item.substr(0, dots), line, "seed");
            const auto hi = parse_u64(item.substr(dots + 2), line, "seed");
            if (hi < lo) throw ParseError(line, "empty seed range '" + item + "'");
            for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
        } else {
            seeds.push_back(parse_u64(item, line, "seed"));
        }
    }
    return seeds;
}

auto record_key(const BenchRecord& r) { return std::tie(r.instance, r.d, r.heuristic, r.seed); }
auto failure_key(const BenchFailure& f) { return std::tie(f.instance, f.d, f.heuristic, f.seed, f.message); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line, std::size_t line_no) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw ParseError(line_no, "unterminated quote");
    out.push_back(std::move(cur));
    return out;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string compact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

struct Group {
    const BenchRecord* first = nullptr;
    Cost best = 0;
    std::map<std::string, Cost> per_heuristic;  // best value per heuristic
};

std::map<std::pair<std::string, std::uint64_t>, Group> group(std::span<const BenchRecord> records) {
    std::map<std::pair<std::string, std::uint64_t>, Group> groups;
    for (const auto& r : records) {
        auto& g = groups[{r.instance, r.d}];
        if (!g.first || r.value < g.best) g.best = r.value;
        if (!g.first) g.first = &r;
        auto [it, fresh] = g.per_heuristic.emplace(r.heuristic, r.value);
        if (!fresh) it->second = std::min(it->second, r.value);
    }
    return groups;
}

double realized_density(const BenchRecord& r) {
    if (r.n < 2) return 0;
    return 200.0 * static_cast<double>(r.m) / (static_cast<double>(r.n) * (r.n - 1));
}

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

} // namespace

Manifest parse_manifest(std::istream& in, const std::filesystem::path& base_dir) {
    Manifest manifest;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::vector<std::string> tok;
        for (std::string t; ss >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() != 4) {
            throw ParseError(line_no, "expected '<instance> <d> <heuristics> <seeds>'");
        }
        ManifestEntry e;
        e.instance = tok[0];
        if (!tok[0].starts_with("fixture:")) {
            const std::filesystem::path p(tok[0]);
            e.path = p.is_absolute() || base_dir.empty() ? p : base_dir / p;
        }
        if (tok[1] != "n-1") e.d = parse_u64(tok[1], line_no, "degree");
        for (const auto& name : split(tok[2], ',')) {
            if (name == "all") {
                for (const auto& h : heuristic_names()) e.heuristics.push_back(h);
            } else if (is_heuristic(name)) {
                e.heuristics.push_back(name);
            } else {
                throw ParseError(line_no, "unknown heuristic '" + name + "'");
            }
        }
        e.seeds = parse_seeds(tok[3], line_no);
        manifest.entries.push_back(std::move(e));
    }
    return manifest;
}

Manifest parse_manifest_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return parse_manifest(in, path.parent_path());
}

SuiteReport run_suite(const Manifest& manifest, const SuiteOptions& options) {
    struct Loaded {
        std::optional<Instance> instance;
        std::optional<double> density;
        Cost db = 0;
        std::string error;
        std::string label;
    };
    std::vector<Loaded> loaded(manifest.entries.size());
    struct Job {
        std::size_t entry;
        std::string heuristic;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
        const auto& e = manifest.entries[i];
        auto& l = loaded[i];
        l.label = e.instance;
        try {
            const GraphFile file = load_graph_source(e.path.empty() ? e.instance : e.path.string());
            l.label = file.meta.id;
            const std::uint64_t d = e.d.value_or(file.graph.num_vertices() - 1);
            l.instance.emplace(make_instance(file, d, file.meta.id));
            l.density = file.meta.density;
            l.db = degree_bound(file.graph, d);
        } catch (const std::exception& ex) {
            l.error = ex.what();
        }
        for (const auto& h : e.heuristics) {
            for (auto s : e.seeds) jobs.push_back({i, h, s});
        }
    }

    std::vector<std::optional<BenchRecord>> records(jobs.size());
    std::vector<std::optional<BenchFailure>> failures(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
            const auto& job = jobs[j];
            const auto& l = loaded[job.entry];
            const std::uint64_t d = manifest.entries[job.entry].d.value_or(0);
            if (!l.instance) {
                failures[j] = BenchFailure{l.label, d, job.heuristic, job.seed, l.error};
                continue;
            }
            const auto& inst = *l.instance;
            try {
                const auto run = run_heuristic(job.heuristic, inst.graph(), inst.degree(), job.seed, options.params);
                BenchRecord r;
                r.instance = inst.id();
                r.d = inst.degree();
                r.n = inst.graph().num_vertices();
                r.m = inst.graph().num_edges();
                r.heuristic = job.heuristic;
                r.seed = job.seed;
                r.value = run.value;
                r.degree_bound = l.db;
                if (inst.best_known()) r.best_known = inst.best_known()->value;
                if (options.timing) {
                    r.runtime_ms = std::chrono::duration<double, std::milli>(run.runtime).count();
                }
                r.density = l.density;
                records[j] = std::move(r);
            } catch (const std::exception& ex) {
                failures[j] = BenchFailure{inst.id(), inst.degree(), job.heuristic, job.seed, ex.what()};
            }
        }
    };
    {
        const unsigned workers = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(jobs.size())));
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
        worker();
    }

    SuiteReport report;
    for (auto& r : records) {
        if (r) report.records.push_back(std::move(*r));
    }
    for (auto& f : failures) {
        if (f) report.failures.push_back(std::move(*f));
    }
    std::stable_sort(report.records.begin(), report.records.end(),
                     [](const auto& a, const auto& b) { return record_key(a) < record_key(b); });
    std::stable_sort(report.failures.begin(), report.failures.end(),
                     [](const auto& a, const auto& b) { return failure_key(a) < failure_key(b); });
    return report;
}

double quality_quotient(std::span<const BenchRecord> records, QuotientMode mode) {
    if (records.empty()) {
        throw std::invalid_argument("quality quotient of an empty record set");
    }
    double sum = 0;
    const auto groups = group(records);
    for (const auto& [key, g] : groups) {
        const BenchRecord& r = *g.first;
        Cost denom = std::max(r.best_known.value_or(0), r.degree_bound);
        if (mode == QuotientMode::strict) denom = std::max<Cost>(denom, 2 * static_cast<Cost>(r.m));
        if (denom <= 0) {
            throw std::domain_error("zero denominator in quality quotient for " + key.first + " d=" +
                                    std::to_string(key.second));
        }
        sum += static_cast<double>(g.best) / static_cast<double>(denom);
    }
    return sum / static_cast<double>(groups.size());
}

double success_factor(std::span<const BenchRecord> records, const std::string& heuristic) {
    std::size_t runs = 0;
    std::size_t wins = 0;
    for (const auto& [key, g] : group(records)) {
        auto it = g.per_heuristic.find(heuristic);
        if (it == g.per_heuristic.end()) continue;
        ++runs;
        Cost best = g.best;
        if (g.first->best_known) best = std::min(best, *g.first->best_known);
        wins += it->second == best ? 1 : 0;
    }
    if (runs == 0) {
        throw std::invalid_argument("no records for heuristic '" + heuristic + "'");
    }
    return static_cast<double>(wins) / static_cast<double>(runs);
}

std::optional<ReportFormat> report_format_from_string(std::string_view s) {
    if (s == "csv") return ReportFormat::csv;
    if (s == "markdown") return ReportFormat::markdown;
    if (s == "plotdata") return ReportFormat::plotdata;
    return std::nullopt;
}

void emit_report(std::ostream& out, const SuiteReport& report, ReportFormat format) {
    const auto& records = report.records;
    if (format == ReportFormat::csv) {
        out << kCsvHeader << '\n';
        for (const auto& r : records) {
            out << csv_field(r.instance) << ',' << r.d << ',' << r.n << ',' << r.m << ',' << r.heuristic << ','
                << r.seed << ',' << r.value << ',' << r.degree_bound << ','
                << (r.best_known ? std::to_string(*r.best_known) : "") << ','
                << (r.runtime_ms ? fixed(*r.runtime_ms, 3) : "") << '\n';
        }
        for (const auto& f : report.failures) {
            out << "# failed," << csv_field(f.instance) << ',' << f.d << ',' << f.heuristic << ',' << f.seed << ','
                << csv_field(f.message) << '\n';
        }
    } else if (format == ReportFormat::markdown) {
        std::vector<std::string> cols;
        for (const auto& h : heuristic_names()) {
            if (std::any_of(records.begin(), records.end(), [&](const auto& r) { return r.heuristic == h; })) {
                cols.push_back(h);
            }
        }
        out << "| Instance | d | n | m | OS | DB |";
        for (const auto& h : cols) out << ' ' << upper(h) << " |";
        out << "\n|---|---|---|---|---|---|";
        for (std::size_t i = 0; i < cols.size(); ++i) out << "---|";
        out << '\n';
        auto cell = [](Cost v, bool bold) {
            return bold ? "**" + std::to_string(v) + "**" : std::to_string(v);
        };
        for (const auto& [key, g] : group(records)) {
            const auto& r = *g.first;
            Cost best = g.best;
            if (r.best_known) best = std::min(best, *r.best_known);
            out << "| " << r.instance << " | " << r.d << " | " << r.n << " | " << r.m << " | "
                << (r.best_known ? cell(*r.best_known, *r.best_known == best) : "-") << " | " << r.degree_bound
                << " |";
            for (const auto& h : cols) {
                auto it = g.per_heuristic.find(h);
                out << ' ' << (it == g.per_heuristic.end() ? "-" : cell(it->second, it->second == best)) << " |";
            }
            out << '\n';
        }
        if (!records.empty()) {
            out << '\n';
            for (auto [mode, label] : {std::pair{QuotientMode::standard, "max(OS, DB)"},
                                       std::pair{QuotientMode::strict, "max(OS, DB, 2m)"}}) {
                out << "quality quotient, " << label << ": ";
                try {
                    out << fixed(quality_quotient(records, mode), 6) << '\n';
                } catch (const std::domain_error&) {
                    out << "undefined (zero denominator)\n";
                }
            }
            out << "\n| Heuristic | success |\n|---|---|\n";
            for (const auto& h : cols) {
                out << "| " << upper(h) << " | " << fixed(success_factor(records, h), 3) << " |\n";
            }
        }
        if (!report.failures.empty()) {
            out << "\nfailures:\n";
            for (const auto& f : report.failures) {
                out << "- " << f.instance << " d=" << f.d << ' ' << f.heuristic << " seed=" << f.seed << ": "
                    << f.message << '\n';
            }
        }
    } else {
        std::map<std::pair<std::uint64_t, double>, std::vector<BenchRecord>> buckets;
        for (const auto& r : records) {
            const double x = r.density ? *r.density : std::round(realized_density(r));
            buckets[{r.d, x}].push_back(r);
        }
        out << "d,density,q\n";
        for (const auto& [key, rs] : buckets) {
            try {
                const double q = quality_quotient(rs);
                out << key.first << ',' << compact(key.second) << ',' << fixed(q, 6) << '\n';
            } catch (const std::domain_error&) {
                // edgeless groups without a known optimum have no quotient
            }
        }
    }
}

SuiteReport parse_csv_report(std::istream& in) {
    SuiteReport report;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (!header) {
            if (line != kCsvHeader) throw ParseError(line_no, "unexpected CSV header");
            header = true;
            continue;
        }
        if (line.starts_with("# failed,")) {
            auto f = csv_split(line.substr(9), line_no);
            if (f.size() != 5) throw ParseError(line_no, "malformed failure line");
            report.failures.push_back(
                {f[0], parse_u64(f[1], line_no, "degree"), f[2], parse_u64(f[3], line_no, "seed"), f[4]});
            continue;
        }
        if (line[0] == '#') continue;
        auto f = csv_split(line, line_no);
        if (f.size() != 10) throw ParseError(line_no, "expected 10 columns");
        BenchRecord r;
        r.instance = f[0];
        r.d = parse_u64(f[1], line_no, "d");
        r.n = static_cast<Vertex>(parse_u64(f[2], line_no, "n"));
        r.m = parse_u64(f[3], line_no, "m");
        r.heuristic = f[4];
        r.seed = parse_u64(f[5], line_no, "seed");
        r.value = static_cast<Cost>(parse_u64(f[6], line_no, "value"));
        r.degree_bound = static_cast<Cost>(parse_u64(f[7], line_no, "db"));
        if (!f[8].empty()) r.best_known = static_cast<Cost>(parse_u64(f[8], line_no, "best_known"));
        if (!f[9].empty()) {
            try {
                r.runtime_ms = std::stod(f[9]);
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad runtime '" + f[9] + "'");
            }
        }
        report.records.push_back(std::move(r));
    }
    if (!header) throw ParseError(line_no, "missing CSV header");
    return report;
}

} // namespace dapt
