#include "bisieve/primality.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "bisieve/error.hpp"
#include "bisieve/sieve.hpp"

namespace bisieve {

namespace {

// Generated by `bisieve carmichael --limit 1000000`.
constexpr std::array<Natural, 43> kCarmichaelTable{
    561,    1105,   1729,   2465,   2821,   6601,   8911,   10585,  15841,  29341,  41041,
    46657,  52633,  62745,  63973,  75361,  101101, 115921, 126217, 162401, 172081, 188461,
    252601, 278545, 294409, 314821, 334153, 340561, 399001, 410041, 449065, 488881, 512461,
    530881, 552721, 656601, 658801, 670033, 748657, 825265, 838201, 852841, 997633,
};

void require_composite_domain(Natural n) {
    if (n < 3) {
        throw DomainError("witness fraction needs n >= 3");
    }
    if (trial_division_is_prime(n)) {
        throw DomainError(std::to_string(n) + " is prime; every coprime base passes");
    }
}

bool every_coprime_base_passes(Natural n) {
    bool any_coprime = false;
    for (Natural a = 2; a < n; ++a) {
        if (gcd(a, n) != 1) {
            continue;
        }
        any_coprime = true;
        if (mod_pow(a, n - 1, n) != 1) {
            return false;
        }
    }
    return any_coprime;
}

}  // namespace

bool fermat_base_passes(Natural a, Natural p) {
    return mod_pow(a, p - 1, p) == 1;
}

bool fermat_test(Natural p, unsigned iterations, RandomSource& rng, FermatOptions options) {
    if (p == 0) {
        throw DomainError("Fermat test undefined for p = 0");
    }
    if (iterations == 0) {
        throw DomainError("iterations must be >= 1");
    }
    if (p == 1) {
        return false;
    }
    if (options.exclude_trivial_base && p == 2) {
        return true;
    }
    for (unsigned i = 0; i < iterations; ++i) {
        const Natural a = options.exclude_trivial_base ? rng.next() % (p - 2) + 2 : rng.next() % (p - 1) + 1;
        if (!fermat_base_passes(a, p)) {
            return false;
        }
    }
    return true;
}

Fraction fermat_witness_fraction(Natural n) {
    require_composite_domain(n);
    Fraction result{0, 0};
    for (Natural a = 2; a < n; ++a) {
        if (gcd(a, n) != 1) {
            continue;
        }
        ++result.denominator;
        if (fermat_base_passes(a, n)) {
            ++result.numerator;
        }
    }
    return result;
}

bool fools_every_coprime_base(Natural n) {
    require_composite_domain(n);
    return every_coprime_base_passes(n);
}

std::vector<Natural> carmichael_scan(Natural limit) {
    if (limit > kCarmichaelScanMax) {
        throw DomainError("carmichael scan is capped at 10^6");
    }
    std::vector<Natural> found;
    if (limit < 4) {
        return found;
    }
    const BasePrimeSet primes = sieve_sequential(limit);
    auto next_prime = primes.primes.begin();
    for (Natural n = 4; n <= limit; ++n) {
        next_prime = std::lower_bound(next_prime, primes.primes.end(), n);
        if (next_prime != primes.primes.end() && *next_prime == n) {
            continue;
        }
        // Cheap rejection before the full coprime-base sweep.
        if ((n % 2 != 0 && !fermat_base_passes(2, n)) || !every_coprime_base_passes(n)) {
            continue;
        }
        found.push_back(n);
    }
    return found;
}

std::span<const Natural> known_carmichael_numbers() {
    return kCarmichaelTable;
}

bool is_known_carmichael(Natural n) {
    return std::binary_search(kCarmichaelTable.begin(), kCarmichaelTable.end(), n);
}

}  // namespace bisieve
