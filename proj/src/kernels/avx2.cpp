// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "bisieve/bitmap_kernels.hpp"

namespace bisieve::kernels::avx2 {

namespace {

// Nibble-lookup popcount (Mula), summed into four 64-bit lanes with vpsadbw.
inline __m256i popcount_bytes(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

}  // namespace

std::size_t count_set_bits(std::span<const Word> words) {
    const Word* data = words.data();
    const std::size_t n = words.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
    }
    alignas(32) Word lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) {
        total += static_cast<std::size_t>(std::popcount(data[i]));
    }
    return total;
}

void or_shifted_into(std::span<Word> dst, std::span<const Word> src, unsigned shift) {
    Word* out = dst.data();
    const Word* in = src.data();
    const std::size_t n = src.size();
    if (shift == 0) {
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4) {
            const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
            const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_or_si256(a, b));
        }
        for (; i < n; ++i) {
            out[i] |= in[i];
        }
        return;
    }

    // out[i] |= (in[i] << s) | (in[i-1] >> (64-s)), with in[-1] == 0.
    if (n == 0) {
        return;
    }
    const __m128i left = _mm_cvtsi32_si128(static_cast<int>(shift));
    const __m128i right = _mm_cvtsi32_si128(static_cast<int>(64 - shift));
    out[0] |= in[0] << shift;
    std::size_t i = 1;
    for (; i + 4 <= n; i += 4) {
        const __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
        const __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i - 1));
        const __m256i merged = _mm256_or_si256(_mm256_sll_epi64(cur, left), _mm256_srl_epi64(prev, right));
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_or_si256(a, merged));
    }
    for (; i < n; ++i) {
        out[i] |= (in[i] << shift) | (in[i - 1] >> (64 - shift));
    }
    if (n < dst.size()) {
        out[n] |= in[n - 1] >> (64 - shift);
    }
}

}  // namespace bisieve::kernels::avx2
