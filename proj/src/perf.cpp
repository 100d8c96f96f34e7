#include "bisieve/perf.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "bisieve/cluster.hpp"
#include "bisieve/error.hpp"

namespace bisieve {

namespace {

double seconds(std::chrono::nanoseconds ns) {
    return std::chrono::duration<double>(ns).count();
}

}  // namespace

double speedup(double t_serial, double t_parallel) {
    if (!(t_serial > 0.0) || !(t_parallel > 0.0)) {
        throw DomainError("speedup needs positive times");
    }
    return t_serial / t_parallel;
}

double efficiency(double s, Natural p) {
    if (p == 0) {
        throw DomainError("efficiency needs p >= 1");
    }
    return s / static_cast<double>(p);
}

double amdahl_speedup(AmdahlInput input) {
    if (!(input.f >= 0.0 && input.f <= 1.0)) {
        throw DomainError("Amdahl parallel fraction must lie in [0, 1]");
    }
    if (!(input.s >= 1.0)) {
        throw DomainError("Amdahl component speedup must be >= 1");
    }
    return 1.0 / ((1.0 - input.f) + input.f / input.s);
}

BenchRecord make_bench_record(Natural n, Natural k, std::size_t workers, double t_serial, double t_parallel,
                              std::size_t repetitions) {
    const double s = speedup(t_serial, t_parallel);
    return BenchRecord{n, k, workers, t_serial, t_parallel, s, efficiency(s, workers), repetitions};
}

double median(std::vector<double> samples) {
    if (samples.empty()) {
        throw DomainError("median of no samples");
    }
    const std::size_t mid = samples.size() / 2;
    std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(mid), samples.end());
    const double upper = samples[mid];
    if (samples.size() % 2 == 1) {
        return upper;
    }
    const double lower = *std::max_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(mid));
    return (lower + upper) / 2.0;
}

BenchReport run_benchmark(std::span<const Natural> n_list, Natural k, std::span<const std::size_t> worker_list,
                          std::size_t repetitions) {
    if (repetitions < 3) {
        throw DomainError("benchmark needs at least 3 repetitions");
    }
    BenchReport report;
    for (Natural n : n_list) {
        std::vector<double> serial_times;
        std::vector<Natural> reference;
        for (std::size_t r = 0; r < repetitions; ++r) {
            PrimeResult serial = run_serial_baseline(n);
            serial_times.push_back(seconds(serial.timing.compute()));
            if (r == 0) {
                reference = std::move(serial.primes);
            }
        }
        const double t_serial = median(serial_times);

        for (std::size_t workers : worker_list) {
            std::vector<double> parallel_times;
            for (std::size_t r = 0; r < repetitions; ++r) {
                PrimeResult hybrid = run_cluster_sieve(n, k, workers);
                parallel_times.push_back(seconds(hybrid.timing.compute()));
                if (r == 0 && hybrid.primes != reference) {
                    throw DomainError("hybrid sieve disagrees with serial baseline at n = " + std::to_string(n));
                }
            }
            BenchRecord record = make_bench_record(n, k, workers, t_serial, median(parallel_times), repetitions);
            if (record.speedup < 1.0) {
                auto& slower = report.slower_until[workers];
                slower = std::max(slower, n);
            }
            report.records.push_back(record);
        }
    }
    return report;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
    out << kBenchCsvHeader << '\n';
    char line[256];
    for (const BenchRecord& r : records) {
        // %.9f etc. are locale-sensitive only under setlocale(); the library never calls it.
        std::snprintf(line, sizeof line, "%llu,%llu,%zu,%.9f,%.9f,%.6f,%.6f,%zu\n",
                      static_cast<unsigned long long>(r.n), static_cast<unsigned long long>(r.k), r.workers,
                      r.t_serial, r.t_parallel, r.speedup, r.efficiency, r.repetitions);
        out << line;
    }
}

}  // namespace bisieve
