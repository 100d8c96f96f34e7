#include "bisieve/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <exception>
#include <string>
#include <thread>

#include "bisieve/bitmap_kernels.hpp"
#include "bisieve/error.hpp"

namespace bisieve {

namespace {

using Word = Segment::Word;

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// Marks multiples of the base primes lying in [from, to] into a bitmap whose
// bit 0 stands for `origin`. Each prime starts at max(p^2, first multiple >= from)
// so base primes themselves are never marked.
void mark_multiples(Word* words, [[maybe_unused]] std::size_t nbits, Natural origin, Natural from, Natural to,
                    const BasePrimeSet& base, Direction direction) {
    for (Natural p : base.primes) {
        if (p > to / p) {
            break;
        }
        const Natural first_multiple = (from + p - 1) / p * p;
        const Natural start = std::max(p * p, first_multiple);
        if (start > to) {
            continue;
        }
        if (direction == Direction::HeadToTail) {
            for (Natural m = start; m <= to; m += p) {
                const std::size_t offset = m - origin;
                assert(offset < nbits);
                words[offset >> 6] |= Word{1} << (offset & 63);
            }
        } else {
            Natural m = to - to % p;
            while (true) {
                const std::size_t offset = m - origin;
                assert(offset < nbits);
                words[offset >> 6] |= Word{1} << (offset & 63);
                if (m - start < p) {
                    break;
                }
                m -= p;
            }
        }
    }
}

void require_cover(const SieveRange& range, const BasePrimeSet& base) {
    if (!base.covers(range)) {
        throw PreconditionError("base primes up to " + std::to_string(base.limit) + " cannot sieve up to " +
                                std::to_string(range.hi()) + " (need " + std::to_string(isqrt(range.hi())) + ")");
    }
}

void run_on_new_thread(std::function<void()> head, std::function<void()> tail) {
    std::exception_ptr tail_error;
    std::thread worker([&] {
        try {
            tail();
        } catch (...) {
            tail_error = std::current_exception();
        }
    });
    try {
        head();
    } catch (...) {
        worker.join();
        throw;
    }
    worker.join();
    if (tail_error) {
        std::rethrow_exception(tail_error);
    }
}

}  // namespace

SieveRange::SieveRange(Natural lo, Natural hi) : lo_(lo), hi_(hi) {
    if (lo < 2 || lo > hi) {
        throw DomainError("invalid sieve range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "]: need 2 <= lo <= hi");
    }
    if (hi >= kNaturalLimit) {
        throw DomainError("sieve range exceeds 2^63");
    }
}

Segment::Segment(std::size_t index, SieveRange range)
    : index_(index), range_(range), words_(words_for(range.length()), 0) {}

std::size_t Segment::count_marked() const {
    return kernels::active().count_set_bits(words_);
}

BasePrimeSet sieve_sequential(Natural limit) {
    BasePrimeSet result{limit, {}};
    if (limit < 2) {
        return result;
    }
    if (limit >= kNaturalLimit) {
        throw DomainError("sieve limit exceeds 2^63");
    }
    const std::size_t nbits = static_cast<std::size_t>(limit) + 1;
    std::vector<Word> composite(words_for(nbits), 0);
    auto is_marked = [&](Natural v) { return (composite[v >> 6] >> (v & 63)) & 1U; };
    composite[0] |= 0b11;  // 0 and 1
    for (Natural p = 2; p <= limit / p; ++p) {
        if (is_marked(p)) {
            continue;
        }
        for (Natural m = p * p; m <= limit; m += p) {
            composite[m >> 6] |= Word{1} << (m & 63);
        }
    }
    if (nbits % 64 != 0) {
        composite.back() |= ~Word{0} << (nbits % 64);
    }
    result.primes.reserve(composite.size() * 64 - kernels::active().count_set_bits(composite));
    for (std::size_t i = 0; i < composite.size(); ++i) {
        Word open = ~composite[i];
        while (open != 0) {
            result.primes.push_back(Natural{i} * 64 + static_cast<Natural>(std::countr_zero(open)));
            open &= open - 1;
        }
    }
    return result;
}

void sieve_directional_in_place(Segment& segment, const BasePrimeSet& base, Direction direction) {
    const SieveRange& range = segment.range();
    require_cover(range, base);
    mark_multiples(segment.words().data(), segment.length(), range.lo(), range.lo(), range.hi(), base, direction);
}

Segment sieve_segment_directional(Segment segment, const BasePrimeSet& base, Direction direction) {
    sieve_directional_in_place(segment, base, direction);
    return segment;
}

Natural bidirectional_split(const SieveRange& range) noexcept {
    return range.lo() + (range.length() + 1) / 2;
}

void sieve_bidirectional_in_place(Segment& segment, const BasePrimeSet& base, const PairRunner& runner) {
    const SieveRange& range = segment.range();
    require_cover(range, base);
    if (segment.length() < 2) {
        sieve_directional_in_place(segment, base, Direction::HeadToTail);
        return;
    }
    const Natural mid = bidirectional_split(range);
    const std::size_t head_bits = mid - range.lo();
    const std::size_t tail_bits = range.hi() - mid + 1;

    // The halves may share a 64-bit word at the split, so the tail core writes
    // into its own bitmap which is spliced in after both cores finish.
    std::vector<Word> tail_words(words_for(tail_bits), 0);
    Word* head_words = segment.words().data();

    runner(
        [&] {
            mark_multiples(head_words, head_bits, range.lo(), range.lo(), mid - 1, base, Direction::HeadToTail);
        },
        [&] {
            mark_multiples(tail_words.data(), tail_bits, mid, mid, range.hi(), base, Direction::TailToHead);
        });

    auto dst = segment.words().subspan(head_bits / 64);
    kernels::active().or_shifted_into(dst, tail_words, static_cast<unsigned>(head_bits % 64));
}

Segment sieve_segment_bidirectional(Segment segment, const BasePrimeSet& base) {
    sieve_bidirectional_in_place(segment, base, run_on_new_thread);
    return segment;
}

std::vector<Natural> collect_primes(const Segment& segment) {
    std::vector<Natural> primes;
    primes.reserve(segment.count_unmarked());
    const auto words = segment.words();
    const std::size_t len = segment.length();
    const Natural lo = segment.range().lo();
    for (std::size_t i = 0; i < words.size(); ++i) {
        Word open = ~words[i];
        if (i + 1 == words.size() && len % 64 != 0) {
            open &= (Word{1} << (len % 64)) - 1;
        }
        while (open != 0) {
            primes.push_back(lo + Natural{i} * 64 + static_cast<Natural>(std::countr_zero(open)));
            open &= open - 1;
        }
    }
    return primes;
}

}  // namespace bisieve
