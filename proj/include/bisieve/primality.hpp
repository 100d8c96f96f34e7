#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bisieve/modular.hpp"

namespace bisieve {

/// Seeded source of raw 64-bit draws: std::mt19937_64, whose output sequence
/// is fixed by the C++ standard, so a seed reproduces the same bases on any
/// conforming platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

struct FermatOptions {
    /// Draw bases from [2, p-1] instead of [1, p-1]; a = 1 always passes.
    bool exclude_trivial_base = false;
};

/// True iff a^(p-1) == 1 (mod p).
bool fermat_base_passes(Natural a, Natural p);

/// Fermat test with `iterations` random bases a = rand() mod (p-1) + 1.
/// Returns false for p == 1; throws DomainError for p == 0 or iterations == 0.
bool fermat_test(Natural p, unsigned iterations, RandomSource& rng, FermatOptions options = {});

struct Fraction {
    Natural numerator;
    Natural denominator;

    double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(denominator); }
    bool is_one() const noexcept { return numerator == denominator; }
};

/// Fraction of bases a in [2, n-1] coprime to n that satisfy a^(n-1) == 1 (mod n).
/// Requires composite n >= 3; throws DomainError otherwise.
Fraction fermat_witness_fraction(Natural n);

/// True iff every base a in [2, n-1] coprime to n passes, i.e. the
/// witness fraction is exactly 1. Stops at the first failing base.
bool fools_every_coprime_base(Natural n);

/// Composite n <= limit fooling every coprime base (Carmichael numbers).
/// limit is capped at 10^6.
std::vector<Natural> carmichael_scan(Natural limit);

inline constexpr Natural kCarmichaelScanMax = 1'000'000;

/// Carmichael numbers <= 10^6, precomputed.
std::span<const Natural> known_carmichael_numbers();

/// Membership test against the precomputed table (n <= 10^6 only).
bool is_known_carmichael(Natural n);

}  // namespace bisieve
