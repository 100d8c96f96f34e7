#include "bisieve/partition.hpp"

#include "bisieve/error.hpp"

namespace bisieve {

Natural node_count_literal(Natural n, Natural k) {
    if (k == 0) {
        throw DomainError("segment scale k must be >= 1");
    }
    return n / k + ((n % k) & 1);
}

CoreDequeCount core_deque_count(Natural node_count) {
    return {2 * node_count, 2 * node_count};
}

SieveMode mode_for_length(Natural segment_length, Natural k) noexcept {
    return 2 * segment_length <= k ? SieveMode::SingleCore : SieveMode::DualBidirectional;
}

ClusterPlan plan_partition(Natural n, Natural k) {
    if (n < 2) {
        throw DomainError("n must be >= 2");
    }
    if (k < 2) {
        throw DomainError("segment scale k must be >= 2");
    }
    if (n >= kNaturalLimit) {
        throw DomainError("n exceeds 2^63");
    }
    const Natural span = n - 1;  // integers in [2, n]
    const Natural nodes = span / k + (span % k != 0 ? 1 : 0);

    ClusterPlan plan{n, k, {}, 0, 0};
    plan.plans.reserve(nodes);
    for (Natural id = 0; id < nodes; ++id) {
        const Natural lo = 2 + id * k;
        const Natural hi = (n - lo < k) ? n : lo + (k - 1);
        plan.plans.push_back({id, SieveRange(lo, hi), mode_for_length(hi - lo + 1, k)});
    }
    const auto counts = core_deque_count(nodes);
    plan.cores_required = counts.cores;
    plan.deques_required = counts.deques;
    return plan;
}

}  // namespace bisieve
