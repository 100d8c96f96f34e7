#pragma once

#include <cstdint>

namespace bisieve {

using Natural = std::uint64_t;

/// Largest accepted operand for the modular routines (exclusive): 2^63.
inline constexpr Natural kNaturalLimit = Natural{1} << 63;

/// (a * b) mod c using a 128-bit intermediate. Throws DomainError when c == 0.
Natural mod_mul(Natural a, Natural b, Natural c);

struct ModPowTrace {
    Natural value;
    unsigned multiplications;  // squarings + accumulator multiplies
};

/// (a^b) mod c by binary exponentiation. mod_pow(a, 0, 1) == 0.
Natural mod_pow(Natural a, Natural b, Natural c);

/// Same as mod_pow, also reporting how many modular multiplications ran.
ModPowTrace mod_pow_traced(Natural a, Natural b, Natural c);

/// floor(sqrt(n)), exact for the full 64-bit range.
Natural isqrt(Natural n);

/// Primality by dividing by every d in [2, sqrt(n)]. Slow; used as ground truth.
bool trial_division_is_prime(Natural n);

Natural gcd(Natural a, Natural b);

}  // namespace bisieve
