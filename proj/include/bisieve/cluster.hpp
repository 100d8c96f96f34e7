#pragma once

#include <chrono>
#include <cstddef>
#include <exception>
#include <memory>
#include <variant>
#include <vector>

#include "bisieve/channel.hpp"
#include "bisieve/partition.hpp"
#include "bisieve/sieve.hpp"

namespace bisieve {

// --- messages exchanged between the coordinator and node worker groups ---

struct BasePrimesMessage {
    std::shared_ptr<const BasePrimeSet> base;
};

struct SegmentAssignment {
    NodePlan plan;
};

struct SegmentResult {
    std::size_t node_id;
    SieveRange range;
    std::vector<Natural> primes;
    std::exception_ptr error;  // set when the node failed to sieve
};

struct Shutdown {};

enum class MessageKind { BasePrimes, SegmentAssignment, SegmentResult, Shutdown };

using ClusterMessage = std::variant<BasePrimesMessage, SegmentAssignment, SegmentResult, Shutdown>;

MessageKind kind_of(const ClusterMessage& message) noexcept;

using NodeBuffer = BoundedFifo<ClusterMessage>;

inline constexpr std::size_t kDefaultBufferCapacity = 16;

struct PhaseTimings {
    std::chrono::nanoseconds partition{0};
    std::chrono::nanoseconds broadcast{0};
    std::chrono::nanoseconds sieve{0};
    std::chrono::nanoseconds gather{0};

    /// Partition + broadcast + sieve; gather (result concatenation) excluded.
    std::chrono::nanoseconds compute() const noexcept { return partition + broadcast + sieve; }
};

struct PrimeResult {
    Natural n = 0;
    std::vector<Natural> primes;
    std::size_t count = 0;
    PhaseTimings timing;
};

struct ClusterOptions {
    std::size_t max_nodes = 1;
    std::size_t buffer_capacity = kDefaultBufferCapacity;
};

struct ClusterStats {
    std::size_t node_workers = 0;
    std::size_t segments = 0;
    std::size_t dual_segments = 0;
    std::size_t max_inbox_occupancy = 0;
    std::size_t max_gather_occupancy = 0;
};

/// Partition [2, n] into k-sized segments, broadcast base primes to up to
/// max_nodes node worker groups, sieve each segment (two cores for dual
/// nodes), and gather the primes by node id.
PrimeResult run_cluster_sieve(Natural n, Natural k, const ClusterOptions& options, ClusterStats* stats = nullptr);
PrimeResult run_cluster_sieve(Natural n, Natural k, std::size_t max_nodes);

/// Plain sequential sieve with the same timing instrumentation.
PrimeResult run_serial_baseline(Natural n);

}  // namespace bisieve
