#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bisieve/modular.hpp"

namespace bisieve {

/// Closed integer interval [lo, hi] with 2 <= lo <= hi.
class SieveRange {
public:
    SieveRange(Natural lo, Natural hi);

    Natural lo() const noexcept { return lo_; }
    Natural hi() const noexcept { return hi_; }
    std::size_t length() const noexcept { return static_cast<std::size_t>(hi_ - lo_ + 1); }
    bool contains(Natural v) const noexcept { return v >= lo_ && v <= hi_; }

    friend bool operator==(const SieveRange&, const SieveRange&) = default;

private:
    Natural lo_;
    Natural hi_;
};

/// All primes <= limit, ascending.
struct BasePrimeSet {
    Natural limit = 0;
    std::vector<Natural> primes;

    bool covers(const SieveRange& range) const noexcept { return limit >= isqrt(range.hi()); }
};

enum class Direction { HeadToTail, TailToHead };

/// A range plus its composite-flag bitmap (bit set <=> marked composite).
/// Bits past length() inside the last word are always clear.
class Segment {
public:
    using Word = std::uint64_t;

    Segment(std::size_t index, SieveRange range);

    std::size_t index() const noexcept { return index_; }
    const SieveRange& range() const noexcept { return range_; }
    std::size_t length() const noexcept { return range_.length(); }

    bool is_marked(std::size_t offset) const noexcept { return (words_[offset >> 6] >> (offset & 63)) & 1U; }
    void mark(std::size_t offset) noexcept { words_[offset >> 6] |= Word{1} << (offset & 63); }

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    std::size_t count_marked() const;
    std::size_t count_unmarked() const { return length() - count_marked(); }

    friend bool operator==(const Segment& a, const Segment& b) {
        return a.range_ == b.range_ && a.words_ == b.words_;
    }

private:
    std::size_t index_;
    SieveRange range_;
    std::vector<Word> words_;
};

/// Plain sieve of Eratosthenes over [0, limit]. limit < 2 yields an empty set.
BasePrimeSet sieve_sequential(Natural limit);

/// Mark every multiple of every base prime inside the segment, walking each
/// prime's multiples ascending (HeadToTail) or descending (TailToHead).
/// Throws PreconditionError unless base.limit >= isqrt(hi).
Segment sieve_segment_directional(Segment segment, const BasePrimeSet& base, Direction direction);
void sieve_directional_in_place(Segment& segment, const BasePrimeSet& base, Direction direction);

/// Runs `tail` concurrently with `head` and returns once both finished.
using PairRunner = std::function<void(std::function<void()> head, std::function<void()> tail)>;

/// Splits at mid = lo + ceil(len/2): the head worker sieves [lo, mid) ascending,
/// the tail worker sieves [mid, hi] descending, concurrently. Bit-identical to
/// the directional kernel. Segments shorter than 2 use a single worker.
Segment sieve_segment_bidirectional(Segment segment, const BasePrimeSet& base);
void sieve_bidirectional_in_place(Segment& segment, const BasePrimeSet& base, const PairRunner& runner);

/// Unmarked values of a sieved segment, ascending.
std::vector<Natural> collect_primes(const Segment& segment);

/// First value of the upper (tail) half used by the bidirectional kernel.
Natural bidirectional_split(const SieveRange& range) noexcept;

}  // namespace bisieve
