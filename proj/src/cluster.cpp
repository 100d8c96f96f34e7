#include "bisieve/cluster.hpp"

#include <algorithm>
#include <semaphore>
#include <string>
#include <thread>

#include "bisieve/error.hpp"

namespace bisieve {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::nanoseconds since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

// The second core of a dual-core node: a persistent thread that runs the
// tail half while the node's own thread runs the head half.
class TailCore {
public:
    TailCore() : thread_([this] { loop(); }) {}

    TailCore(const TailCore&) = delete;
    TailCore& operator=(const TailCore&) = delete;

    ~TailCore() {
        stopping_ = true;
        start_.release();
        thread_.join();
    }

    void run_pair(const std::function<void()>& head, const std::function<void()>& tail) {
        task_ = &tail;
        error_ = nullptr;
        start_.release();
        std::exception_ptr head_error;
        try {
            head();
        } catch (...) {
            head_error = std::current_exception();
        }
        done_.acquire();
        task_ = nullptr;
        if (head_error) {
            std::rethrow_exception(head_error);
        }
        if (error_) {
            std::rethrow_exception(error_);
        }
    }

private:
    void loop() {
        while (true) {
            start_.acquire();
            if (stopping_) {
                return;
            }
            try {
                (*task_)();
            } catch (...) {
                error_ = std::current_exception();
            }
            done_.release();
        }
    }

    std::binary_semaphore start_{0};
    std::binary_semaphore done_{0};
    const std::function<void()>* task_ = nullptr;
    std::exception_ptr error_;
    bool stopping_ = false;
    std::thread thread_;
};

// One SMP node: an inbox, a head core (this worker's thread) and a tail core.
class NodeWorker {
public:
    NodeWorker(std::size_t capacity, NodeBuffer& gather) : inbox_(capacity), gather_(gather) {
        thread_ = std::thread([this] { loop(); });
    }

    NodeWorker(const NodeWorker&) = delete;
    NodeWorker& operator=(const NodeWorker&) = delete;

    ~NodeWorker() {
        if (thread_.joinable()) {
            thread_.join();
        }
    }

    NodeBuffer& inbox() noexcept { return inbox_; }

    void join() {
        if (thread_.joinable()) {
            thread_.join();
        }
    }

private:
    void loop() {
        std::shared_ptr<const BasePrimeSet> base;
        while (true) {
            ClusterMessage message = inbox_.pop();
            if (auto* primes = std::get_if<BasePrimesMessage>(&message)) {
                base = std::move(primes->base);
            } else if (auto* assignment = std::get_if<SegmentAssignment>(&message)) {
                gather_.push(sieve(assignment->plan, base.get()));
            } else if (std::holds_alternative<Shutdown>(message)) {
                return;
            }
        }
    }

    SegmentResult sieve(const NodePlan& plan, const BasePrimeSet* base) {
        SegmentResult result{plan.node_id, plan.segment_range, {}, nullptr};
        try {
            if (base == nullptr) {
                throw PreconditionError("segment assigned before base primes arrived");
            }
            Segment segment(plan.node_id, plan.segment_range);
            if (plan.mode == SieveMode::DualBidirectional) {
                sieve_bidirectional_in_place(segment, *base,
                                             [this](std::function<void()> head, std::function<void()> tail) {
                                                 tail_core_.run_pair(head, tail);
                                             });
            } else {
                sieve_directional_in_place(segment, *base, Direction::HeadToTail);
            }
            result.primes = collect_primes(segment);
        } catch (...) {
            result.error = std::current_exception();
        }
        return result;
    }

    NodeBuffer inbox_;
    NodeBuffer& gather_;
    TailCore tail_core_;
    std::thread thread_;
};

void validate(const SegmentResult& result, const NodePlan& plan) {
    const bool inside = result.primes.empty() ||
                        (plan.segment_range.contains(result.primes.front()) &&
                         plan.segment_range.contains(result.primes.back()));
    const bool ascending = std::adjacent_find(result.primes.begin(), result.primes.end(),
                                              [](Natural a, Natural b) { return a >= b; }) == result.primes.end();
    if (!(result.range == plan.segment_range) || !inside || !ascending) {
        throw std::logic_error("node " + std::to_string(result.node_id) + " returned primes outside its segment");
    }
}

}  // namespace

MessageKind kind_of(const ClusterMessage& message) noexcept {
    switch (message.index()) {
        case 0:
            return MessageKind::BasePrimes;
        case 1:
            return MessageKind::SegmentAssignment;
        case 2:
            return MessageKind::SegmentResult;
        default:
            return MessageKind::Shutdown;
    }
}

PrimeResult run_cluster_sieve(Natural n, Natural k, const ClusterOptions& options, ClusterStats* stats) {
    if (options.max_nodes == 0) {
        throw DomainError("max_nodes must be >= 1");
    }
    if (options.buffer_capacity == 0) {
        throw DomainError("buffer capacity must be >= 1");
    }
    PrimeResult result;
    result.n = n;

    auto start = Clock::now();
    const ClusterPlan plan = plan_partition(n, k);
    result.timing.partition = since(start);

    start = Clock::now();
    auto base = std::make_shared<const BasePrimeSet>(sieve_sequential(isqrt(n)));
    const std::size_t worker_count = std::min(options.max_nodes, plan.plans.size());
    NodeBuffer gather(options.buffer_capacity);
    std::vector<std::unique_ptr<NodeWorker>> workers;
    workers.reserve(worker_count);
    for (std::size_t i = 0; i < worker_count; ++i) {
        workers.push_back(std::make_unique<NodeWorker>(options.buffer_capacity, gather));
    }
    for (auto& worker : workers) {
        worker->inbox().push(BasePrimesMessage{base});
    }
    result.timing.broadcast = since(start);

    start = Clock::now();
    // Round-robin dispatch runs beside the gather loop so a full inbox never
    // blocks the coordinator from draining results.
    std::thread dispatcher([&] {
        for (const NodePlan& node : plan.plans) {
            workers[node.node_id % worker_count]->inbox().push(SegmentAssignment{node});
        }
        for (auto& worker : workers) {
            worker->inbox().push(Shutdown{});
        }
    });

    std::vector<std::vector<Natural>> by_node(plan.plans.size());
    std::exception_ptr first_error;
    for (std::size_t received = 0; received < plan.plans.size(); ++received) {
        ClusterMessage message = gather.pop();
        auto* segment = std::get_if<SegmentResult>(&message);
        if (segment == nullptr || segment->node_id >= plan.plans.size()) {
            first_error = first_error ? first_error
                                      : std::make_exception_ptr(std::logic_error("unexpected message in gather buffer"));
            continue;
        }
        if (segment->error) {
            first_error = first_error ? first_error : segment->error;
            continue;
        }
        try {
            validate(*segment, plan.plans[segment->node_id]);
        } catch (...) {
            first_error = first_error ? first_error : std::current_exception();
            continue;
        }
        by_node[segment->node_id] = std::move(segment->primes);
    }
    dispatcher.join();
    for (auto& worker : workers) {
        worker->join();
    }
    result.timing.sieve = since(start);

    if (stats != nullptr) {
        stats->node_workers = worker_count;
        stats->segments = plan.plans.size();
        stats->dual_segments = static_cast<std::size_t>(
            std::count_if(plan.plans.begin(), plan.plans.end(),
                          [](const NodePlan& p) { return p.mode == SieveMode::DualBidirectional; }));
        stats->max_inbox_occupancy = 0;
        for (auto& worker : workers) {
            stats->max_inbox_occupancy = std::max(stats->max_inbox_occupancy, worker->inbox().high_water());
        }
        stats->max_gather_occupancy = gather.high_water();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }

    start = Clock::now();
    std::size_t total = 0;
    for (const auto& primes : by_node) {
        total += primes.size();
    }
    result.primes.reserve(total);
    for (const auto& primes : by_node) {
        result.primes.insert(result.primes.end(), primes.begin(), primes.end());
    }
    result.count = result.primes.size();
    result.timing.gather = since(start);
    return result;
}

PrimeResult run_cluster_sieve(Natural n, Natural k, std::size_t max_nodes) {
    ClusterOptions options;
    options.max_nodes = max_nodes;
    return run_cluster_sieve(n, k, options);
}

PrimeResult run_serial_baseline(Natural n) {
    if (n < 2) {
        throw DomainError("n must be >= 2");
    }
    PrimeResult result;
    result.n = n;
    const auto start = Clock::now();
    BasePrimeSet all = sieve_sequential(n);
    result.timing.sieve = since(start);
    result.primes = std::move(all.primes);
    result.count = result.primes.size();
    return result;
}

}  // namespace bisieve
