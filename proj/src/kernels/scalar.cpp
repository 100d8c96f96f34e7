#include <bit>

#include "bisieve/bitmap_kernels.hpp"

namespace bisieve::kernels::scalar {

std::size_t count_set_bits(std::span<const Word> words) {
    std::size_t total = 0;
    for (Word w : words) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

void or_shifted_into(std::span<Word> dst, std::span<const Word> src, unsigned shift) {
    if (shift == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) {
            dst[i] |= src[i];
        }
        return;
    }
    Word carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i] |= (src[i] << shift) | carry;
        carry = src[i] >> (64 - shift);
    }
    if (src.size() < dst.size()) {
        dst[src.size()] |= carry;
    }
}

}  // namespace bisieve::kernels::scalar
