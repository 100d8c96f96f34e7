#pragma once

#include <condition_variable>
#include <cstddef>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace bisieve {

/// Blocking bounded FIFO. push() waits while full, pop() waits while empty.
/// Order is preserved per producer; the queue never holds more than capacity.
template <typename T>
class BoundedFifo {
public:
    explicit BoundedFifo(std::size_t capacity) : capacity_(capacity) {
        if (capacity == 0) {
            throw std::invalid_argument("buffer capacity must be >= 1");
        }
    }

    BoundedFifo(const BoundedFifo&) = delete;
    BoundedFifo& operator=(const BoundedFifo&) = delete;

    void push(T value) {
        std::unique_lock lock(mutex_);
        not_full_.wait(lock, [&] { return queue_.size() < capacity_; });
        queue_.push_back(std::move(value));
        if (queue_.size() > high_water_) {
            high_water_ = queue_.size();
        }
        lock.unlock();
        not_empty_.notify_one();
    }

    T pop() {
        std::unique_lock lock(mutex_);
        not_empty_.wait(lock, [&] { return !queue_.empty(); });
        T value = std::move(queue_.front());
        queue_.pop_front();
        lock.unlock();
        not_full_.notify_one();
        return value;
    }

    std::size_t capacity() const noexcept { return capacity_; }

    /// Largest occupancy ever observed.
    std::size_t high_water() const {
        std::lock_guard lock(mutex_);
        return high_water_;
    }

private:
    const std::size_t capacity_;
    mutable std::mutex mutex_;
    std::condition_variable not_full_;
    std::condition_variable not_empty_;
    std::deque<T> queue_;
    std::size_t high_water_ = 0;
};

}  // namespace bisieve
