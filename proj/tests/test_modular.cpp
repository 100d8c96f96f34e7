#include <doctest.h>

#include <bit>
#include <random>

#include "bisieve/error.hpp"
#include "bisieve/modular.hpp"
#include "oracle.hpp"

using namespace bisieve;

TEST_CASE("mod_mul examples") {
    CHECK(mod_mul(0, 999, 7) == 0);
    CHECK(mod_mul(3, 4, 5) == 2);
    // (2^31+1)^2 = 2^62 + 2^32 + 1 and 2^62 == 2 (mod 2^61-1).
    const Natural m61 = (Natural{1} << 61) - 1;
    CHECK(mod_mul((Natural{1} << 31) + 1, (Natural{1} << 31) + 1, m61) == 4294967299ULL);
    CHECK_THROWS_AS(mod_mul(1, 2, 0), DomainError);
}

TEST_CASE("mod_mul stays below the modulus for 63-bit operands") {
    std::mt19937_64 rng(0xC0FFEE);
    for (int i = 0; i < 20000; ++i) {
        const Natural a = rng() >> 1, b = rng() >> 1, c = (rng() >> 1) | 1;
        const Natural r = mod_mul(a, b, c);
        REQUIRE(r < c);
        REQUIRE(r == oracle::big_mul_mod(a, b, c));
    }
}

TEST_CASE("mod_pow examples") {
    CHECK(mod_pow(5, 0, 7) == 1);
    CHECK(mod_pow(5, 0, 1) == 0);  // result is reduced mod c
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_pow(2, 340, 341) == 1);
    CHECK(mod_pow(3, 340, 341) == 56);
    CHECK_THROWS_AS(mod_pow(2, 3, 0), DomainError);
}

TEST_CASE("mod_pow multiplication count is at most 2*ceil(log2(b+1))") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 5000; ++i) {
        const Natural b = rng() >> (rng() % 64);
        const auto trace = mod_pow_traced(rng() >> 1, b, (rng() >> 1) | 1);
        // ceil(log2(b+1)) is the bit length of b.
        const unsigned bits = static_cast<unsigned>(std::bit_width(b));
        REQUIRE(trace.multiplications <= 2 * bits);
    }
    CHECK(mod_pow_traced(7, 0, 13).multiplications == 0);
}

TEST_CASE("isqrt is exact at perfect squares and their neighbours") {
    for (Natural r : {Natural{0}, Natural{1}, Natural{2}, Natural{3037000499ULL}, Natural{4294967295ULL}}) {
        const Natural sq = r * r;
        CHECK(isqrt(sq) == r);
        if (sq > 0) CHECK(isqrt(sq - 1) == r - 1);
    }
    CHECK(isqrt(~Natural{0}) == 4294967295ULL);
}

TEST_CASE("trial_division_is_prime") {
    CHECK_FALSE(trial_division_is_prime(0));
    CHECK_FALSE(trial_division_is_prime(1));
    CHECK(trial_division_is_prime(2));
    CHECK(trial_division_is_prime(97));
    CHECK_FALSE(trial_division_is_prime(91));
    CHECK(trial_division_is_prime(2147483647ULL));
    for (Natural n = 0; n < 5000; ++n) {
        REQUIRE(trial_division_is_prime(n) == oracle::is_prime(n));
    }
}
