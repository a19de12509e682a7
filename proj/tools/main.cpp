// Command-line interface: reproduce the distribution tables, dump periodic
// orbits of the multiplication maps, print exact degree moments, export the
// CLT histograms and run the verification suites.
//
// Exit codes: 0 success, 1 verification failure or internal error,
// 2 usage error, 3 enumeration cap exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclic/cache.hpp"
#include "cyclic/checks.hpp"
#include "cyclic/cycle.hpp"
#include "cyclic/dynamics.hpp"
#include "cyclic/enumerate.hpp"
#include "cyclic/formulas.hpp"
#include "cyclic/stats.hpp"
#include "cyclic/table_io.hpp"

namespace {

using namespace cyclic;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Output sink: --out PATH or stdout.
class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::trunc);
            if (!file_) throw UsageError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

struct TablesArgs {
    std::string what;
    int n_min = 0;
    int n_max = 0;
    std::string format = "csv";
    std::string out;
    std::string cache_dir;
    int workers = 0;
    int n_cap = 12;
};

struct OrbitsArgs {
    int k = 0;
    int n = 0;
    std::string cycle;
    int symmetric = 0;
    std::string format = "csv";
    std::string out;
    std::uint64_t modulus_cap = std::uint64_t{1} << 26;
};

struct MomentsArgs {
    int n_min = 0;
    int n_max = 0;
    bool mean_only = false;
    std::string out;
};

struct CltArgs {
    std::string n_list;
    std::string out = ".";
};

struct VerifyArgs {
    std::string suite;
    int n_cap = 0;
    int k_cap = 0;
    int workers = 0;
};

std::filesystem::path resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("CYCLIC_CACHE_DIR"); env && *env) return env;
    return {};
}

JointTable joint_table_cached(int n, const OracleOptions& oracle, const std::filesystem::path& cache_dir) {
    const CacheKey key{"oracle", n, {{"kind", "joint"}}};
    if (!cache_dir.empty())
        if (auto hit = cache_load<JointKey>(cache_dir, key, TableKind::joint)) return *hit;
    auto table = joint_distribution_from(scan_cycles(n, oracle));
    if (!cache_dir.empty()) cache_store(cache_dir, key, table);
    return table;
}

int run_tables(const TablesArgs& args) {
    if (args.n_min < 2 || args.n_max < args.n_min) throw UsageError("need 2 <= n_min <= n_max");
    if (args.format != "csv" && args.format != "json") throw UsageError("format must be csv or json");
    Output output(args.out);
    std::ostream& out = output.stream();
    const OracleOptions oracle{args.n_cap, args.workers};
    const auto cache_dir = resolve_cache_dir(args.cache_dir);

    if (args.what == "Nns" || args.what == "Nnd") {
        std::vector<IndexTable> rows;
        for (int n = args.n_min; n <= args.n_max; ++n)
            rows.push_back(args.what == "Nns" ? symmetry_table(n) : degree_table(n));
        const int col_max = args.what == "Nns" ? args.n_max : std::max(1, args.n_max - 2);
        if (args.format == "csv")
            write_grid_csv(out, rows, col_max);
        else
            write_grid_json(out, args.what, rows);
    } else if (args.what == "Tn") {
        std::vector<std::pair<int, Bigint>> rows;
        for (int n = args.n_min; n <= args.n_max; ++n) rows.emplace_back(n, type_count(n));
        if (args.format == "csv")
            write_scalar_csv(out, "types", rows);
        else
            write_scalar_json(out, "Tn", "types", rows);
    } else if (args.what == "Tnd") {
        std::vector<IndexTable> rows;
        for (int n = args.n_min; n <= args.n_max; ++n)
            rows.push_back(type_table_from_joint(joint_table_cached(n, oracle, cache_dir)));
        if (args.format == "csv")
            write_grid_csv(out, rows, std::max(1, args.n_max - 2));
        else
            write_grid_json(out, "Tnd", rows);
    } else if (args.what == "joint") {
        std::vector<JointTable> rows;
        for (int n = args.n_min; n <= args.n_max; ++n)
            rows.push_back(joint_table_cached(n, oracle, cache_dir));
        if (args.format == "csv")
            write_joint_csv(out, rows);
        else
            write_joint_json(out, rows);
    } else {
        throw UsageError("unknown table kind: " + args.what + " (expected Nns, Nnd, Tn, Tnd or joint)");
    }
    return 0;
}

int run_orbits(const OrbitsArgs& args) {
    if (args.k < 2 || args.n < 1) throw UsageError("need k >= 2 and n >= 1");
    if (!args.cycle.empty() && args.symmetric > 0)
        throw UsageError("--cycle and --symmetric are mutually exclusive");
    if (args.format != "csv" && args.format != "json") throw UsageError("format must be csv or json");
    if (args.symmetric > 0 && (args.k < 3 || args.symmetric > args.k - 2))
        throw UsageError("--symmetric needs k >= 3 and 1 <= j <= k-2");

    std::optional<Cycle> filter;
    if (!args.cycle.empty()) filter = parse_cycle(args.cycle);

    const DynamicsOptions dyn{args.modulus_cap};
    const auto all = orbits(args.k, args.n, dyn);
    std::vector<PeriodicOrbit> selected;
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (filter && !(realized_cycle(all[i]) == *filter)) continue;
        if (args.symmetric > 0 && !rotation_invariant(all[i], args.symmetric)) continue;
        selected.push_back(all[i]);
        indices.push_back(i);
    }

    Output output(args.out);
    if (args.format == "csv")
        write_orbits_csv(output.stream(), selected, indices);
    else
        write_orbits_json(output.stream(), selected, indices);
    return 0;
}

int run_moments(const MomentsArgs& args) {
    if (args.n_min < 3 || args.n_max < args.n_min) throw UsageError("need 3 <= n_min <= n_max");
    if (!args.mean_only && args.n_min < 5)
        throw UsageError("variance needs n_min >= 5; pass --mean-only for smaller n");
    Output output(args.out);
    std::ostream& out = output.stream();
    out << (args.mean_only ? "n,mean\n" : "n,mean,variance\n");
    for (int n = args.n_min; n <= args.n_max; ++n) {
        out << n << ',' << format_rational(degree_mean(n));
        if (!args.mean_only) out << ',' << format_rational(degree_variance(n));
        out << '\n';
    }
    return 0;
}

int run_clt(const CltArgs& args) {
    std::vector<int> ns;
    std::stringstream ss(args.n_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            ns.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("bad n value: " + item);
        }
    }
    if (ns.empty()) throw UsageError("need a comma-separated list of n values");
    for (int n : ns)
        if (n < 5) throw UsageError("clt needs every n >= 5");

    const std::filesystem::path dir = args.out;
    std::filesystem::create_directories(dir);
    std::ofstream summary(dir / "summary.csv", std::ios::trunc);
    summary << "n,kolmogorov_distance\n";
    for (int n : ns) {
        std::ofstream hist(dir / ("hist_n" + std::to_string(n) + ".csv"), std::ios::trunc);
        histogram_csv(n, hist);
        summary << n << ',' << cyclic::detail::format_double17(kolmogorov_distance(n)) << '\n';
    }
    return 0;
}

int run_verify(const VerifyArgs& args) {
    const VerifyOptions opts{args.n_cap, args.k_cap, args.workers};
    std::vector<CheckResult> results;
    if (args.suite == "formulas")
        results = verify_formulas(opts);
    else if (args.suite == "oracle")
        results = verify_oracle(opts);
    else if (args.suite == "dynamics")
        results = verify_dynamics(opts);
    else if (args.suite == "stats")
        results = verify_stats(opts);
    else if (args.suite == "all")
        results = verify_all(opts);
    else
        throw UsageError("unknown suite: " + args.suite + " (expected formulas, oracle, dynamics, stats or all)");

    int failures = 0;
    for (const auto& r : results) {
        if (r.pass) {
            std::cout << "[PASS] " << r.name << '\n';
        } else {
            ++failures;
            std::cout << "[FAIL] " << r.name << " -- " << r.detail << '\n';
        }
    }
    std::cout << results.size() - static_cast<std::size_t>(failures) << "/" << results.size()
              << " checks passed\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact statistics of cyclic permutations and their circle-map realizations"};
    app.require_subcommand(1);

    TablesArgs tables_args;
    auto* tables = app.add_subcommand("tables", "emit a distribution table over a range of n");
    tables->add_option("what", tables_args.what, "one of Nns, Nnd, Tn, Tnd, joint")->required();
    tables->add_option("n_min", tables_args.n_min, "smallest n");
    tables->add_option("n_max", tables_args.n_max, "largest n");
    tables->add_option("--n-min", tables_args.n_min, "smallest n (alternative to the positional)");
    tables->add_option("--n-max", tables_args.n_max, "largest n (alternative to the positional)");
    tables->add_option("--format", tables_args.format, "csv or json")->capture_default_str();
    tables->add_option("--out", tables_args.out, "output file (default stdout)");
    tables->add_option("--workers", tables_args.workers, "worker threads for the oracle scans");
    tables->add_option("--cache-dir", tables_args.cache_dir,
                       "cache directory (default: $CYCLIC_CACHE_DIR when set)");
    tables->add_option("--n-cap", tables_args.n_cap, "oracle enumeration cap")->capture_default_str();

    OrbitsArgs orbits_args;
    auto* orbits_cmd = app.add_subcommand("orbits", "dump period-n orbits of x -> kx mod 1");
    orbits_cmd->add_option("k", orbits_args.k, "multiplier k >= 2")->required();
    orbits_cmd->add_option("n", orbits_args.n, "period")->required();
    orbits_cmd->add_option("--cycle", orbits_args.cycle,
                           "keep only orbits realizing this cycle, e.g. \"(1 3 2 4 6 5)\"");
    orbits_cmd->add_option("--symmetric", orbits_args.symmetric,
                           "keep only orbits invariant under x -> x + j/(k-1)");
    orbits_cmd->add_option("--format", orbits_args.format, "csv or json")->capture_default_str();
    orbits_cmd->add_option("--out", orbits_args.out, "output file (default stdout)");
    orbits_cmd->add_option("--modulus-cap", orbits_args.modulus_cap, "largest allowed k^n - 1")
        ->capture_default_str();

    MomentsArgs moments_args;
    auto* moments = app.add_subcommand("moments", "exact mean and variance of the degree");
    moments->add_option("n_min", moments_args.n_min, "smallest n");
    moments->add_option("n_max", moments_args.n_max, "largest n");
    moments->add_option("--n-min", moments_args.n_min, "smallest n (alternative to the positional)");
    moments->add_option("--n-max", moments_args.n_max, "largest n (alternative to the positional)");
    moments->add_flag("--mean-only", moments_args.mean_only, "omit the variance column (allows 3 <= n < 5)");
    moments->add_option("--out", moments_args.out, "output file (default stdout)");

    CltArgs clt_args;
    auto* clt = app.add_subcommand("clt", "degree histograms and Kolmogorov distances");
    clt->add_option("n_list", clt_args.n_list, "comma-separated n values, e.g. 10,30,50,70")->required();
    clt->add_option("--out", clt_args.out, "output directory")->capture_default_str();

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", verify_args.suite, "formulas, oracle, dynamics, stats or all")->required();
    verify->add_option("--n-cap", verify_args.n_cap, "shrink the n ranges");
    verify->add_option("--k-cap", verify_args.k_cap, "shrink the k ranges");
    verify->add_option("--workers", verify_args.workers, "worker threads for the oracle scans");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(tables)) return run_tables(tables_args);
        if (app.got_subcommand(orbits_cmd)) return run_orbits(orbits_args);
        if (app.got_subcommand(moments)) return run_moments(moments_args);
        if (app.got_subcommand(clt)) return run_clt(clt_args);
        if (app.got_subcommand(verify)) return run_verify(verify_args);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
