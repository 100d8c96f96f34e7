#include "bisieve/modular.hpp"

#include <cmath>
#include <numeric>

#include "bisieve/error.hpp"

namespace bisieve {

namespace {

__extension__ typedef unsigned __int128 Wide;

void require_modulus(Natural c) {
    if (c == 0) {
        throw DomainError("modulus must be >= 1");
    }
}

inline Natural mul_unchecked(Natural a, Natural b, Natural c) {
    return static_cast<Natural>(static_cast<Wide>(a) * b % c);
}

}  // namespace

Natural mod_mul(Natural a, Natural b, Natural c) {
    require_modulus(c);
    return mul_unchecked(a, b, c);
}

ModPowTrace mod_pow_traced(Natural a, Natural b, Natural c) {
    require_modulus(c);
    ModPowTrace trace{1, 0};
    Natural base = a % c;
    while (b > 0) {
        if (b & 1) {
            trace.value = mul_unchecked(trace.value, base, c);
            ++trace.multiplications;
        }
        base = mul_unchecked(base, base, c);
        ++trace.multiplications;
        b >>= 1;
    }
    trace.value %= c;
    return trace;
}

Natural mod_pow(Natural a, Natural b, Natural c) {
    return mod_pow_traced(a, b, c).value;
}

Natural isqrt(Natural n) {
    auto r = static_cast<Natural>(std::sqrt(static_cast<long double>(n)));
    // long double may be off by one near 2^64.
    while (r > 0 && (r > n / r)) {
        --r;
    }
    while ((r + 1) <= n / (r + 1)) {
        ++r;
    }
    return r;
}

bool trial_division_is_prime(Natural n) {
    if (n < 2) {
        return false;
    }
    for (Natural d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Natural gcd(Natural a, Natural b) {
    return std::gcd(a, b);
}

}  // namespace bisieve
