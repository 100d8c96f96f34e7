#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bisieve/cluster.hpp"
#include "bisieve/error.hpp"
#include "bisieve/perf.hpp"
#include "bisieve/primality.hpp"
#include "bisieve/topology.hpp"

namespace bisieve::cli {

namespace {

using nlohmann::json;

enum class Output { Text, Csv, Json };

std::size_t default_workers() {
    if (const char* env = std::getenv("BISIEVE_WORKERS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end != nullptr && *end == '\0' && value > 0) {
            return static_cast<std::size_t>(value);
        }
        throw CLI::ValidationError("BISIEVE_WORKERS", "must be a positive integer, got '" + std::string(env) + "'");
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

json timing_json(const PhaseTimings& t) {
    auto s = [](std::chrono::nanoseconds ns) { return std::chrono::duration<double>(ns).count(); };
    return {{"partition", s(t.partition)}, {"broadcast", s(t.broadcast)}, {"sieve", s(t.sieve)},
            {"gather", s(t.gather)}};
}

json topology_json(const TopologyReport& r) {
    json j{{"kind", topology_name(r.kind)},
           {"p", r.p},
           {"bisection_width", r.bisection_width},
           {"switch_count", r.switch_count}};
    j["dimension"] = r.dimension ? json(*r.dimension) : json(nullptr);
    j["wires_per_switch"] = r.wires_per_switch ? json(*r.wires_per_switch) : json(nullptr);
    j["crossbar_units"] = r.crossbar_units ? json(*r.crossbar_units) : json(nullptr);
    return j;
}

std::string optional_text(const std::optional<Natural>& v) {
    return v ? std::to_string(*v) : std::string();
}

void print_topology(const TopologyReport& r, Output output, std::ostream& out) {
    switch (output) {
        case Output::Json:
            out << topology_json(r).dump() << '\n';
            break;
        case Output::Csv:
            out << "kind,p,dimension,bisection_width,switch_count,wires_per_switch,crossbar_units\n"
                << topology_name(r.kind) << ',' << r.p << ',' << optional_text(r.dimension) << ','
                << r.bisection_width << ',' << r.switch_count << ',' << optional_text(r.wires_per_switch) << ','
                << optional_text(r.crossbar_units) << '\n';
            break;
        case Output::Text:
            out << "topology: " << topology_name(r.kind) << '\n' << "p: " << r.p << '\n';
            if (r.dimension) {
                out << (r.kind == TopologyKind::Omega ? "stages: " : "dimension: ") << *r.dimension << '\n';
            }
            out << "bisection width: " << r.bisection_width << '\n' << "switches: " << r.switch_count << '\n';
            if (r.wires_per_switch) {
                out << "wires per switch: " << *r.wires_per_switch << '\n';
            }
            if (r.crossbar_units) {
                out << "2x2 crossbar units: " << *r.crossbar_units << '\n';
            }
            break;
    }
}

void print_primes(const PrimeResult& result, const json& meta, bool timing, Output output, std::ostream& out) {
    switch (output) {
        case Output::Json: {
            json j = meta;
            j["count"] = result.count;
            j["primes"] = result.primes;
            if (timing) {
                j["timing_s"] = timing_json(result.timing);
            }
            out << j.dump() << '\n';
            break;
        }
        case Output::Csv:
            out << "prime\n";
            for (Natural p : result.primes) {
                out << p << '\n';
            }
            break;
        case Output::Text: {
            for (std::size_t i = 0; i < result.primes.size(); ++i) {
                out << result.primes[i] << ((i + 1) % 10 == 0 || i + 1 == result.primes.size() ? '\n' : ' ');
            }
            out << "count: " << result.count << '\n';
            if (timing) {
                const auto ms = [](std::chrono::nanoseconds ns) {
                    return std::chrono::duration<double, std::milli>(ns).count();
                };
                out << std::fixed << std::setprecision(3) << "partition: " << ms(result.timing.partition)
                    << " ms\nbroadcast: " << ms(result.timing.broadcast) << " ms\nsieve: " << ms(result.timing.sieve)
                    << " ms\ngather: " << ms(result.timing.gather) << " ms\n";
            }
            break;
        }
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hybrid bidirectional segmented prime sieve and primality tools", "bisieve"};
    app.require_subcommand(1);
    app.fallthrough();

    Output output = Output::Text;
    const std::map<std::string, Output> output_names{
        {"text", Output::Text}, {"csv", Output::Csv}, {"json", Output::Json}};
    app.add_option("--output,-o", output, "Output format: text, csv or json")
        ->transform(CLI::CheckedTransformer(output_names, CLI::ignore_case));

    // sieve
    auto* sieve_cmd = app.add_subcommand("sieve", "List primes <= n with the hybrid cluster sieve");
    Natural sieve_n = 0;
    Natural sieve_k = 10'000;
    std::size_t sieve_workers = 0;
    std::size_t sieve_capacity = kDefaultBufferCapacity;
    bool sieve_serial = false;
    bool sieve_timing = false;
    sieve_cmd->add_option("--n", sieve_n, "Upper bound (inclusive)")->required();
    sieve_cmd->add_option("--k", sieve_k, "Segment scale per node")->capture_default_str();
    sieve_cmd->add_option("--workers", sieve_workers, "Concurrent node worker groups (default: $BISIEVE_WORKERS)");
    sieve_cmd->add_option("--capacity", sieve_capacity, "Node buffer capacity in messages")->capture_default_str();
    sieve_cmd->add_flag("--serial", sieve_serial, "Use the sequential baseline instead");
    sieve_cmd->add_flag("--timing", sieve_timing, "Report per-phase wall-clock times");

    // isprime
    auto* isprime_cmd = app.add_subcommand("isprime", "Deterministic trial-division primality check");
    Natural isprime_n = 0;
    isprime_cmd->add_option("--n", isprime_n, "Number to test")->required();

    // fermat
    auto* fermat_cmd = app.add_subcommand("fermat", "Probabilistic Fermat primality test");
    Natural fermat_p = 0;
    unsigned fermat_iters = 20;
    std::optional<std::uint64_t> fermat_seed;
    bool fermat_exclude_trivial = false;
    fermat_cmd->add_option("--p", fermat_p, "Candidate")->required();
    fermat_cmd->add_option("--iters", fermat_iters, "Random bases to try")->capture_default_str();
    fermat_cmd->add_option("--seed", fermat_seed, "RNG seed (mt19937_64) for reproducible runs");
    fermat_cmd->add_flag("--exclude-trivial-base", fermat_exclude_trivial, "Never draw base a = 1");

    // topo
    auto* topo_cmd = app.add_subcommand("topo", "Interconnect cost and connectivity formulas");
    topo_cmd->require_subcommand(1);
    Natural topo_d = 0;
    Natural topo_p = 0;
    auto* hypercube_cmd = topo_cmd->add_subcommand("hypercube", "d-dimensional hypercube");
    hypercube_cmd->add_option("--d", topo_d, "Dimension")->required();
    auto* omega_cmd = topo_cmd->add_subcommand("omega", "Omega network");
    omega_cmd->add_option("--p", topo_p, "Inputs (power of two)")->required();
    auto* crossbar_cmd = topo_cmd->add_subcommand("crossbar", "p x p crossbar");
    crossbar_cmd->add_option("--p", topo_p, "Inputs")->required();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Serial vs hybrid timing sweep");
    std::vector<Natural> bench_n{1'000, 10'000, 100'000, 1'000'000};
    Natural bench_k = 10'000;
    std::vector<std::size_t> bench_workers;
    std::size_t bench_reps = 5;
    bench_cmd->add_option("--n", bench_n, "Upper bounds to sweep")->delimiter(',')->capture_default_str();
    bench_cmd->add_option("--k", bench_k, "Segment scale")->capture_default_str();
    bench_cmd->add_option("--workers", bench_workers, "Worker counts to sweep (default: $BISIEVE_WORKERS)")
        ->delimiter(',');
    bench_cmd->add_option("--reps", bench_reps, "Repetitions per point (median kept, >= 3)")->capture_default_str();

    // carmichael
    auto* carmichael_cmd = app.add_subcommand("carmichael", "Enumerate Carmichael numbers by exhaustive base scan");
    Natural carmichael_limit = 0;
    carmichael_cmd->add_option("--limit", carmichael_limit, "Upper bound (<= 1000000)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (sieve_cmd->parsed()) {
            json meta{{"n", sieve_n}};
            PrimeResult result;
            if (sieve_serial) {
                meta["mode"] = "serial";
                result = run_serial_baseline(sieve_n);
            } else {
                ClusterOptions options;
                options.max_nodes = sieve_cmd->count("--workers") > 0 ? sieve_workers : default_workers();
                options.buffer_capacity = sieve_capacity;
                meta["mode"] = "hybrid";
                meta["k"] = sieve_k;
                meta["workers"] = options.max_nodes;
                result = run_cluster_sieve(sieve_n, sieve_k, options);
            }
            print_primes(result, meta, sieve_timing, output, out);
        } else if (isprime_cmd->parsed()) {
            const bool prime = trial_division_is_prime(isprime_n);
            switch (output) {
                case Output::Json:
                    out << json{{"n", isprime_n}, {"prime", prime}}.dump() << '\n';
                    break;
                case Output::Csv:
                    out << "n,prime\n" << isprime_n << ',' << (prime ? "true" : "false") << '\n';
                    break;
                case Output::Text:
                    out << isprime_n << (prime ? " is prime\n" : " is not prime\n");
                    break;
            }
        } else if (fermat_cmd->parsed()) {
            const std::uint64_t seed = fermat_seed ? *fermat_seed : std::random_device{}();
            RandomSource rng(seed);
            const bool passed = fermat_test(fermat_p, fermat_iters, rng, {fermat_exclude_trivial});
            const bool carmichael = fermat_p <= kCarmichaelScanMax && is_known_carmichael(fermat_p);
            const char* verdict = passed ? "probably prime" : "composite";
            switch (output) {
                case Output::Json:
                    out << json{{"p", fermat_p},
                                {"iterations", fermat_iters},
                                {"seed", seed},
                                {"exclude_trivial_base", fermat_exclude_trivial},
                                {"verdict", passed ? "probably_prime" : "composite"},
                                {"carmichael", carmichael}}
                               .dump()
                        << '\n';
                    break;
                case Output::Csv:
                    out << "p,iterations,seed,verdict,carmichael\n"
                        << fermat_p << ',' << fermat_iters << ',' << seed << ','
                        << (passed ? "probably_prime" : "composite") << ',' << (carmichael ? "true" : "false")
                        << '\n';
                    break;
                case Output::Text:
                    out << fermat_p << ": " << verdict << " (" << fermat_iters << " rounds, seed " << seed << ")\n";
                    if (carmichael) {
                        out << "warning: " << fermat_p
                            << " is a Carmichael number; every base coprime to it passes the Fermat test\n";
                    }
                    break;
            }
        } else if (topo_cmd->parsed()) {
            TopologyReport report = hypercube_cmd->parsed() ? hypercube_metrics(topo_d)
                                    : omega_cmd->parsed()   ? omega_metrics(topo_p)
                                                            : crossbar_metrics(topo_p);
            print_topology(report, output, out);
        } else if (bench_cmd->parsed()) {
            if (bench_workers.empty()) {
                bench_workers.push_back(default_workers());
            }
            const BenchReport report = run_benchmark(bench_n, bench_k, bench_workers, bench_reps);
            switch (output) {
                case Output::Csv:
                    write_bench_csv(out, report.records);
                    break;
                case Output::Json: {
                    json rows = json::array();
                    for (const BenchRecord& r : report.records) {
                        rows.push_back({{"n", r.n},
                                        {"k", r.k},
                                        {"workers", r.workers},
                                        {"t_serial_s", r.t_serial},
                                        {"t_parallel_s", r.t_parallel},
                                        {"speedup", r.speedup},
                                        {"efficiency", r.efficiency},
                                        {"reps", r.repetitions}});
                    }
                    json slower = json::object();
                    for (const auto& [workers, n] : report.slower_until) {
                        slower[std::to_string(workers)] = n;
                    }
                    out << json{{"records", rows}, {"hybrid_slower_until", slower}}.dump() << '\n';
                    break;
                }
                case Output::Text: {
                    out << std::left << std::setw(12) << "n" << std::setw(8) << "workers" << std::setw(14)
                        << "serial (s)" << std::setw(14) << "hybrid (s)" << std::setw(10) << "speedup"
                        << "efficiency\n";
                    for (const BenchRecord& r : report.records) {
                        out << std::setw(12) << r.n << std::setw(8) << r.workers << std::fixed << std::setprecision(6)
                            << std::setw(14) << r.t_serial << std::setw(14) << r.t_parallel << std::setprecision(3)
                            << std::setw(10) << r.speedup << r.efficiency << '\n';
                    }
                    for (const auto& [workers, n] : report.slower_until) {
                        out << "hybrid slower than serial up to n = " << n << " with " << workers << " workers\n";
                    }
                    break;
                }
            }
        } else if (carmichael_cmd->parsed()) {
            const std::vector<Natural> found = carmichael_scan(carmichael_limit);
            switch (output) {
                case Output::Json:
                    out << json{{"limit", carmichael_limit}, {"carmichael", found}}.dump() << '\n';
                    break;
                case Output::Csv:
                    out << "carmichael\n";
                    for (Natural c : found) {
                        out << c << '\n';
                    }
                    break;
                case Output::Text:
                    for (Natural c : found) {
                        out << c << '\n';
                    }
                    out << "count: " << found.size() << '\n';
                    break;
            }
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return kExitOk;
}

}  // namespace bisieve::cli
