#include <doctest.h>

#include <random>

#include "bisieve/error.hpp"
#include "bisieve/partition.hpp"

using namespace bisieve;

namespace {

// Checks tiling of [2, n], ascending ids, the mode rule, and Eq. 4 counts.
void check_plan(const ClusterPlan& plan, Natural n, Natural k) {
    REQUIRE(!plan.plans.empty());
    Natural expected_lo = 2;
    for (std::size_t i = 0; i < plan.plans.size(); ++i) {
        const auto& node = plan.plans[i];
        REQUIRE(node.node_id == i);
        REQUIRE(node.segment_range.lo() == expected_lo);
        const Natural len = node.segment_range.length();
        REQUIRE(len <= k);
        if (i + 1 < plan.plans.size()) REQUIRE(len == k);
        REQUIRE((node.mode == SieveMode::SingleCore) == (2 * len <= k));
        expected_lo = node.segment_range.hi() + 1;
    }
    REQUIRE(expected_lo == n + 1);
    REQUIRE(plan.cores_required == 2 * plan.plans.size());
    REQUIRE(plan.deques_required == 2 * plan.plans.size());
}

}  // namespace

TEST_CASE("node_count_literal") {
    CHECK(node_count_literal(100, 10) == 10);
    CHECK(node_count_literal(105, 10) == 11);
    CHECK(node_count_literal(102, 10) == 10);
    CHECK_THROWS_AS(node_count_literal(10, 0), DomainError);
}

TEST_CASE("core_deque_count") {
    CHECK(core_deque_count(0).cores == 0);
    CHECK(core_deque_count(10).cores == 20);
    CHECK(core_deque_count(10).deques == 20);
    CHECK(core_deque_count(11).cores == 22);
    CHECK(core_deque_count(11).deques == 22);
}

TEST_CASE("plan_partition examples") {
    const auto one = plan_partition(101, 100);
    REQUIRE(one.plans.size() == 1);
    CHECK(one.plans[0].segment_range == SieveRange(2, 101));
    CHECK(one.plans[0].mode == SieveMode::DualBidirectional);

    const auto ten = plan_partition(1001, 100);
    REQUIRE(ten.plans.size() == 10);
    CHECK(ten.plans.front().segment_range == SieveRange(2, 101));
    CHECK(ten.plans[1].segment_range == SieveRange(102, 201));
    CHECK(ten.plans.back().segment_range == SieveRange(902, 1001));
    for (const auto& p : ten.plans) CHECK(p.mode == SieveMode::DualBidirectional);
    CHECK(ten.cores_required == 20);

    const auto eleven = plan_partition(1041, 100);
    REQUIRE(eleven.plans.size() == 11);
    CHECK(eleven.plans.back().segment_range.length() == 40);
    CHECK(eleven.plans.back().mode == SieveMode::SingleCore);

    // K == k/2 exactly is single core; one more is dual.
    CHECK(plan_partition(1051, 100).plans.back().mode == SieveMode::SingleCore);
    CHECK(plan_partition(1052, 100).plans.back().mode == SieveMode::DualBidirectional);
    // odd k: 2K <= k with K = 3, k = 7
    CHECK(mode_for_length(3, 7) == SieveMode::SingleCore);
    CHECK(mode_for_length(4, 7) == SieveMode::DualBidirectional);
}

TEST_CASE("plan_partition domain errors") {
    CHECK_THROWS_AS(plan_partition(1, 10), DomainError);
    CHECK_THROWS_AS(plan_partition(100, 1), DomainError);
    CHECK_NOTHROW(plan_partition(2, 2));
    CHECK(plan_partition(2, 2).plans.size() == 1);
}

TEST_CASE("plan_partition tiles [2, n] on a random grid") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 400; ++i) {
        const Natural n = 2 + rng() % 999'999;
        const Natural k = 2 + rng() % 9'999;
        CAPTURE(n);
        CAPTURE(k);
        const auto plan = plan_partition(n, k);
        check_plan(plan, n, k);
        CHECK(plan.plans.size() == (n - 1 + k - 1) / k);
    }
}

TEST_CASE("literal node count agrees with the tiling exactly when n mod k is 0 or an odd value >= 3") {
    // Characterisation found by enumerating every (n, k) below; see README.
    for (Natural k = 2; k <= 60; ++k) {
        for (Natural n = 2; n <= 600; ++n) {
            const Natural r = n % k;
            const bool agrees = node_count_literal(n, k) == plan_partition(n, k).plans.size();
            CAPTURE(n);
            CAPTURE(k);
            REQUIRE(agrees == (r == 0 || (r % 2 == 1 && r >= 3)));
        }
    }
}
