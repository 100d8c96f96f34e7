#pragma once

#include <cstddef>
#include <vector>

#include "bisieve/modular.hpp"
#include "bisieve/sieve.hpp"

namespace bisieve {

enum class SieveMode { SingleCore, DualBidirectional };

struct NodePlan {
    std::size_t node_id;
    SieveRange segment_range;
    SieveMode mode;
};

struct CoreDequeCount {
    Natural cores;
    Natural deques;
};

struct ClusterPlan {
    Natural n;
    Natural k;
    std::vector<NodePlan> plans;
    Natural cores_required;
    Natural deques_required;
};

/// Node count formula N = floor(n/k) + ((n mod k) & 1), evaluated verbatim.
/// Note the `& 1` tests the low bit of the remainder, so an even non-zero
/// remainder adds no node; plan_partition uses ceiling division instead.
Natural node_count_literal(Natural n, Natural k);

/// Two cores and two deques per node: (2N, 2N).
CoreDequeCount core_deque_count(Natural node_count);

/// Single core iff the node's length K satisfies 2K <= k.
SieveMode mode_for_length(Natural segment_length, Natural k) noexcept;

/// Tiles [2, n] with ceil((n-1)/k) consecutive segments of length k (the last
/// may be shorter). Throws DomainError for n < 2 or k < 2.
ClusterPlan plan_partition(Natural n, Natural k);

}  // namespace bisieve
