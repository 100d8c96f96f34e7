#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Word-parallel bitmap loops used by the sieve. Each kernel has a scalar
// reference and, on x86-64, an AVX2 variant; `active()` picks one at runtime.
namespace bisieve::kernels {

using Word = std::uint64_t;

enum class Isa { Scalar, Avx2 };

/// Number of set bits across all words.
using CountFn = std::size_t (*)(std::span<const Word> words);

/// dst bit (shift + j) |= src bit j for every j < 64 * src.size().
/// Requires shift < 64 and dst.size() >= src.size().
/// Bits shifted past the end of dst are dropped.
using OrShiftedFn = void (*)(std::span<Word> dst, std::span<const Word> src, unsigned shift);

struct KernelTable {
    Isa isa;
    CountFn count_set_bits;
    OrShiftedFn or_shifted_into;
};

namespace scalar {
std::size_t count_set_bits(std::span<const Word> words);
void or_shifted_into(std::span<Word> dst, std::span<const Word> src, unsigned shift);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define BISIEVE_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::size_t count_set_bits(std::span<const Word> words);
void or_shifted_into(std::span<Word> dst, std::span<const Word> src, unsigned shift);
}  // namespace avx2
#endif

/// True when the CPU can execute the given variant.
bool cpu_supports(Isa isa);

/// Table for a specific ISA; throws std::runtime_error if unsupported.
const KernelTable& table_for(Isa isa);

/// Best supported table. BISIEVE_FORCE_SCALAR=1 in the environment pins scalar.
const KernelTable& active();

std::string_view isa_name(Isa isa);

}  // namespace bisieve::kernels
