#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bisieve/modular.hpp"

namespace bisieve {

/// S = t_serial / t_parallel. Both times must be positive.
double speedup(double t_serial, double t_parallel);

/// E = S / P.
double efficiency(double s, Natural p);

struct AmdahlInput {
    double f;  // parallel fraction, [0, 1]
    double s;  // speedup of the parallel part, >= 1
};

/// 1 / ((1 - f) + f / s).
double amdahl_speedup(AmdahlInput input);

struct BenchRecord {
    Natural n;
    Natural k;
    std::size_t workers;
    double t_serial;    // seconds, median
    double t_parallel;  // seconds, median
    double speedup;
    double efficiency;
    std::size_t repetitions;
};

BenchRecord make_bench_record(Natural n, Natural k, std::size_t workers, double t_serial, double t_parallel,
                              std::size_t repetitions);

struct BenchReport {
    std::vector<BenchRecord> records;
    /// Per worker count: the largest n at which the hybrid run was slower
    /// than the serial baseline. Absent if it never was.
    std::map<std::size_t, Natural> slower_until;
};

/// Median of the samples (mean of the two middle values for even counts).
double median(std::vector<double> samples);

/// Times run_serial_baseline and run_cluster_sieve for every (n, workers)
/// pair, keeping the median of `repetitions` runs (>= 3). Throws DomainError
/// for fewer repetitions or mismatching outputs.
BenchReport run_benchmark(std::span<const Natural> n_list, Natural k, std::span<const std::size_t> worker_list,
                          std::size_t repetitions);

inline constexpr const char* kBenchCsvHeader = "n,k,workers,t_serial_s,t_parallel_s,speedup,efficiency,reps";

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace bisieve
