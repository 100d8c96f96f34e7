#include <doctest.h>

#include "bisieve/error.hpp"
#include "bisieve/topology.hpp"

using namespace bisieve;

TEST_CASE("hypercube") {
    const auto d1 = hypercube_metrics(1);
    CHECK(d1.p == 2);
    CHECK(d1.bisection_width == 1);
    CHECK(d1.wires_per_switch == 2);
    const auto d3 = hypercube_metrics(3);
    CHECK(d3.p == 8);
    CHECK(d3.bisection_width == 4);
    CHECK(d3.wires_per_switch == 4);
    const auto d4 = hypercube_metrics(4);
    CHECK(d4.p == 16);
    CHECK(d4.bisection_width == 8);
    CHECK(d4.wires_per_switch == 5);
    CHECK(d4.dimension == 4);
    CHECK_THROWS_AS(hypercube_metrics(0), DomainError);
    CHECK_THROWS_AS(hypercube_metrics(63), DomainError);
    for (Natural d = 1; d <= 62; ++d) {
        const auto r = hypercube_metrics(d);
        REQUIRE(r.bisection_width * 2 == r.p);
        REQUIRE(r.p == (Natural{1} << *r.dimension));
    }
}

TEST_CASE("omega") {
    CHECK(omega_metrics(2).switch_count == 4);
    CHECK(omega_metrics(2).crossbar_units == 1);
    CHECK(omega_metrics(8).switch_count == 48);
    CHECK(omega_metrics(8).crossbar_units == 12);
    CHECK(omega_metrics(16).switch_count == 128);
    CHECK(omega_metrics(16).crossbar_units == 32);
    CHECK_THROWS_AS(omega_metrics(12), DomainError);
    CHECK_THROWS_AS(omega_metrics(1), DomainError);
    CHECK_THROWS_AS(omega_metrics(0), DomainError);
}

TEST_CASE("crossbar") {
    CHECK(crossbar_metrics(1).switch_count == 1);
    CHECK(crossbar_metrics(8).switch_count == 64);
    CHECK(crossbar_metrics(16).switch_count == 256);
    CHECK(crossbar_metrics(16).bisection_width == 16);
    CHECK_THROWS_AS(crossbar_metrics(0), DomainError);
}

TEST_CASE("switch counts grow with p, and omega undercuts crossbar from p = 8") {
    Natural prev_omega = 0, prev_cross = 0, prev_cube = 0;
    for (unsigned m = 1; m <= 20; ++m) {
        const Natural p = Natural{1} << m;
        const auto omega = omega_metrics(p);
        const auto cross = crossbar_metrics(p);
        const auto cube = hypercube_metrics(m);
        REQUIRE(omega.switch_count > prev_omega);
        REQUIRE(cross.switch_count > prev_cross);
        REQUIRE(cube.switch_count > prev_cube);
        if (p >= 8) REQUIRE(omega.switch_count < cross.switch_count);
        prev_omega = omega.switch_count;
        prev_cross = cross.switch_count;
        prev_cube = cube.switch_count;
    }
    for (Natural p = 1; p < 2000; ++p) {
        REQUIRE(crossbar_metrics(p + 1).switch_count > crossbar_metrics(p).switch_count);
    }
}
