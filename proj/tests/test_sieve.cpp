#include <doctest.h>

#include <random>
#include <set>
#include <thread>

#include "bisieve/error.hpp"
#include "bisieve/sieve.hpp"
#include "oracle.hpp"

using namespace bisieve;

namespace {

Segment fresh(Natural lo, Natural hi) { return Segment(0, SieveRange(lo, hi)); }

std::vector<Natural> directional(Natural lo, Natural hi, Natural base_limit, Direction dir) {
    return collect_primes(sieve_segment_directional(fresh(lo, hi), sieve_sequential(base_limit), dir));
}

}  // namespace

TEST_CASE("SieveRange rejects bad bounds") {
    CHECK_THROWS_AS(SieveRange(1, 10), DomainError);
    CHECK_THROWS_AS(SieveRange(10, 9), DomainError);
    CHECK(SieveRange(5, 5).length() == 1);
}

TEST_CASE("sieve_sequential") {
    CHECK(sieve_sequential(10).primes == std::vector<Natural>{2, 3, 5, 7});
    CHECK(sieve_sequential(2).primes == std::vector<Natural>{2});
    CHECK(sieve_sequential(1).primes.empty());
    CHECK(sieve_sequential(0).primes.empty());
    for (Natural limit : {3, 63, 64, 65, 127, 128, 1000, 4099}) {
        CAPTURE(limit);
        CHECK(sieve_sequential(limit).primes == oracle::primes_in(2, limit));
    }
}

TEST_CASE("sieve_sequential(10^6) has the oracle count") {
    // 78498 from a trial-division enumeration of [2, 10^6].
    const auto set = sieve_sequential(1'000'000);
    CHECK(set.primes.size() == 78498);
    CHECK(set.primes.back() == 999983);
}

TEST_CASE("directional kernel, both directions") {
    const std::vector<Natural> to30{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    CHECK(directional(2, 30, 5, Direction::HeadToTail) == to30);
    CHECK(directional(2, 30, 5, Direction::TailToHead) == to30);

    const std::vector<Natural> hundreds{101, 103, 107, 109, 113};
    const auto base = sieve_sequential(11);
    const auto a = sieve_segment_directional(fresh(100, 120), base, Direction::HeadToTail);
    const auto b = sieve_segment_directional(fresh(100, 120), base, Direction::TailToHead);
    CHECK(a == b);
    CHECK(collect_primes(a) == hundreds);
}

TEST_CASE("a base prime alone in its segment stays unmarked") {
    for (Natural p : {2, 3, 5, 7, 11, 13}) {
        CHECK(directional(p, p, 13, Direction::HeadToTail) == std::vector<Natural>{p});
        CHECK(directional(p, p, 13, Direction::TailToHead) == std::vector<Natural>{p});
    }
}

TEST_CASE("directional kernel rejects short base sets") {
    CHECK_THROWS_AS(sieve_segment_directional(fresh(2, 100), sieve_sequential(9), Direction::HeadToTail),
                    PreconditionError);
    CHECK_NOTHROW(sieve_segment_directional(fresh(2, 100), sieve_sequential(10), Direction::HeadToTail));
}

TEST_CASE("bidirectional kernel examples") {
    CHECK(collect_primes(sieve_segment_bidirectional(fresh(2, 100), sieve_sequential(10))).size() == 25);
    CHECK(collect_primes(sieve_segment_bidirectional(fresh(2, 3), sieve_sequential(1))) ==
          std::vector<Natural>{2, 3});
    const auto gap = sieve_segment_bidirectional(fresh(90, 96), sieve_sequential(9));
    CHECK(collect_primes(gap).empty());
    CHECK(gap.count_unmarked() == 0);
    // length-1 segments fall back to one worker
    CHECK(collect_primes(sieve_segment_bidirectional(fresh(97, 97), sieve_sequential(9))) ==
          std::vector<Natural>{97});
}

TEST_CASE("bidirectional split uses ceil(len/2) for the head") {
    CHECK(bidirectional_split(SieveRange(2, 3)) == 3);
    CHECK(bidirectional_split(SieveRange(2, 4)) == 4);   // len 3: head [2,3], tail [4]
    CHECK(bidirectional_split(SieveRange(10, 19)) == 15);
}

TEST_CASE("collect_primes") {
    auto seg = fresh(2, 10);
    CHECK(collect_primes(sieve_segment_directional(seg, sieve_sequential(3), Direction::HeadToTail)) ==
          std::vector<Natural>{2, 3, 5, 7});
    CHECK(collect_primes(sieve_segment_directional(fresh(999'900, 1'000'000), sieve_sequential(1000),
                                                   Direction::TailToHead)) ==
          oracle::primes_in(999'900, 1'000'000));
    Segment all_marked = fresh(24, 28);
    for (std::size_t i = 0; i < all_marked.length(); ++i) all_marked.mark(i);
    CHECK(collect_primes(all_marked).empty());
}

TEST_CASE("oracle equivalence on random ranges below 10^6") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        const Natural lo = 2 + rng() % 999'000;
        const Natural hi = std::min<Natural>(1'000'000, lo + rng() % 700);
        const auto base = sieve_sequential(isqrt(hi));
        const auto dir = (i % 2) ? Direction::HeadToTail : Direction::TailToHead;
        const auto expected = oracle::primes_in(lo, hi);
        REQUIRE(collect_primes(sieve_segment_directional(fresh(lo, hi), base, dir)) == expected);
        REQUIRE(collect_primes(sieve_segment_bidirectional(fresh(lo, hi), base)) == expected);
    }
}

TEST_CASE("bidirectional is bit-identical to directional and deterministic") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 300; ++i) {
        const Natural len = 2 + rng() % 3000;
        const Natural lo = 2 + rng() % 50'000'000;
        const Natural hi = lo + len - 1;
        // base sets may also be longer than required
        const auto base = sieve_sequential(isqrt(hi) + rng() % 50);
        const auto uni = sieve_segment_directional(fresh(lo, hi), base, Direction::HeadToTail);
        const auto bi1 = sieve_segment_bidirectional(fresh(lo, hi), base);
        const auto bi2 = sieve_segment_bidirectional(fresh(lo, hi), base);
        REQUIRE(uni == bi1);
        REQUIRE(bi1 == bi2);
    }
}

TEST_CASE("custom pair runner sees disjoint halves") {
    const auto base = sieve_sequential(100);
    Segment seg = fresh(1000, 1999);
    int calls = 0;
    sieve_bidirectional_in_place(seg, base, [&](std::function<void()> head, std::function<void()> tail) {
        ++calls;
        tail();  // sequential order must not matter
        head();
    });
    CHECK(calls == 1);
    CHECK(collect_primes(seg) == oracle::primes_in(1000, 1999));
}

TEST_CASE("padding bits stay clear") {
    const auto base = sieve_sequential(100);
    auto seg = sieve_segment_bidirectional(fresh(2, 70), base);
    CHECK((seg.words()[1] >> (69 % 64)) == 0);
    CHECK(seg.count_unmarked() == oracle::primes_in(2, 70).size());
}
