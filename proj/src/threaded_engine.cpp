#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <iostream>
#include <mutex>
#include <queue>
#include <thread>
#include <vector>

#include "corekit/engine.hpp"

namespace corekit {

namespace {

using Clock = std::chrono::steady_clock;

struct VertexActor {
    std::mutex mtx;
    std::deque<Message> mailbox;
    bool scheduled = false;
    VertexState state;
};

struct DelayedMsg {
    Clock::time_point due;
    VertexId to;
    Message msg;
    bool operator>(const DelayedMsg& o) const { return due > o.due; }
};

struct ThreadLog {
    std::vector<std::uint64_t> delivery_times;  // microseconds since start
    std::vector<ActivationSpan> activations;
    std::uint64_t delivered = 0;
};

unsigned resolve_thread_count(unsigned requested, std::size_t n) {
    unsigned limit = std::thread::hardware_concurrency();
    if (limit == 0) limit = 4;
    if (const char* env = std::getenv("COREKIT_THREADS")) {
        unsigned cap = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
        if (cap > 0) limit = std::min(limit, cap);
    }
    if (requested > 0) limit = std::min(limit, requested);
    if (n > 0) limit = std::min<unsigned>(limit, static_cast<unsigned>(n));
    return std::max(1u, limit);
}

} // namespace

SimResult run_threaded(const Graph& g, const SimConfig& config) {
    config.validate();
    const std::uint64_t heartbeat_ms = config.effective_heartbeat_period();
    const std::uint64_t quiet_ms = config.effective_quiet_period();
    const auto start = Clock::now();
    auto now_us = [&start]() -> std::uint64_t {
        return static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start)
                .count());
    };

    SimResult res;
    res.virtual_time = false;
    const std::size_t n = g.n();

    std::vector<VertexActor> actors(n);
    for (VertexId u = 0; u < n; ++u) {
        actors[u].state = init_state(u, static_cast<std::uint32_t>(g.degree(u)));
        actors[u].mailbox = std::deque<Message>();  // grows as needed, >= degree
    }

    // Shared scheduling state.
    std::mutex ready_mtx;
    std::condition_variable ready_cv;
    std::deque<VertexId> ready;
    std::atomic<bool> stop{false};

    // Heartbeat intake: a timestamp is all the watchdog keeps.
    std::atomic<std::uint64_t> last_heartbeat_us{0};
    std::atomic<std::uint64_t> heartbeat_count{0};
    auto heartbeat = [&]() {
        ++heartbeat_count;
        std::uint64_t t = now_us();
        std::uint64_t prev = last_heartbeat_us.load();
        while (prev < t && !last_heartbeat_us.compare_exchange_weak(prev, t)) {
        }
    };

    std::atomic<std::uint64_t> sent{0};
    std::atomic<std::int64_t> in_flight{0};

    // Delayed channel: messages with nonzero latency pass through a timer.
    std::mutex timer_mtx;
    std::condition_variable timer_cv;
    std::priority_queue<DelayedMsg, std::vector<DelayedMsg>, std::greater<>> timer_q;
    std::atomic<bool> timer_stop{false};

    auto enqueue = [&](VertexId to, const Message& msg) {
        bool need_schedule = false;
        {
            std::lock_guard lk(actors[to].mtx);
            actors[to].mailbox.push_back(msg);
            if (!actors[to].scheduled) {
                actors[to].scheduled = true;
                need_schedule = true;
            }
        }
        if (need_schedule) {
            std::lock_guard lk(ready_mtx);
            ready.push_back(to);
            ready_cv.notify_one();
        }
    };

    auto send = [&](VertexId to, const Message& msg, std::uint64_t delay_ms) {
        ++sent;
        ++in_flight;
        if (delay_ms == 0) {
            enqueue(to, msg);
        } else {
            std::lock_guard lk(timer_mtx);
            timer_q.push({Clock::now() + std::chrono::milliseconds(delay_ms), to, msg});
            timer_cv.notify_one();
        }
    };

    std::thread timer_thread([&] {
        std::unique_lock lk(timer_mtx);
        while (!timer_stop) {
            if (timer_q.empty()) {
                timer_cv.wait(lk, [&] { return timer_stop.load() || !timer_q.empty(); });
                continue;
            }
            auto due = timer_q.top().due;
            if (Clock::now() < due) {
                timer_cv.wait_until(lk, due);
                continue;
            }
            DelayedMsg d = timer_q.top();
            timer_q.pop();
            lk.unlock();
            enqueue(d.to, d.msg);
            lk.lock();
        }
    });

    const unsigned nthreads = resolve_thread_count(config.max_threads, n);
    std::vector<ThreadLog> logs(nthreads);

    auto worker = [&](unsigned tid) {
        ThreadLog& log = logs[tid];
        std::mt19937_64 rng(config.rng_seed * 0x9e3779b97f4a7c15ull + tid + 1);
        std::deque<Message> batch;
        while (true) {
            VertexId u;
            {
                std::unique_lock lk(ready_mtx);
                ready_cv.wait(lk, [&] { return stop.load() || !ready.empty(); });
                if (ready.empty()) {
                    if (stop) return;
                    continue;
                }
                u = ready.front();
                ready.pop_front();
            }
            VertexActor& a = actors[u];
            {
                std::lock_guard lk(a.mtx);
                batch.swap(a.mailbox);
            }
            const std::uint64_t t0 = now_us();
            bool recomputed_any = false;
            for (const Message& msg : batch) {
                Transition tr = handle_message(a.state, msg);
                ++log.delivered;
                --in_flight;
                log.delivery_times.push_back(now_us());
                if (tr.recomputed) {
                    recomputed_any = true;
                    if (!config.heartbeat_on_decrease_only || tr.broadcast)
                        heartbeat();
                }
                if (tr.broadcast) {
                    for (VertexId v : g.neighbors(u))
                        send(v, {u, tr.new_estimate}, config.latency.sample(rng));
                }
            }
            batch.clear();
            if (recomputed_any) log.activations.push_back({t0, now_us()});
            {
                std::lock_guard lk(a.mtx);
                if (!a.mailbox.empty()) {
                    std::lock_guard rlk(ready_mtx);
                    ready.push_back(u);
                    ready_cv.notify_one();
                } else {
                    a.scheduled = false;
                }
            }
        }
    };

    // Initial round: every vertex announces its degree and reports active.
    {
        std::mt19937_64 init_rng(config.rng_seed);
        for (VertexId u = 0; u < n; ++u) {
            res.activations.push_back({0, 0});
            heartbeat();
            for (VertexId v : g.neighbors(u))
                send(v, {u, actors[u].state.estimate},
                     config.latency.sample(init_rng));
            actors[u].state.active = false;
        }
    }

    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);

    // Watchdog: a single quiet flag, realized as the last-heartbeat time.
    bool early_fire = false;
    {
        const auto poll = std::chrono::milliseconds(std::max<std::uint64_t>(1, heartbeat_ms / 2));
        while (true) {
            std::this_thread::sleep_for(poll);
            std::uint64_t silent_us = now_us() - last_heartbeat_us.load();
            if (silent_us >= quiet_ms * 1000) break;
        }
        if (in_flight.load() > 0) {
            early_fire = true;
            std::cerr << "warning: watchdog fired with " << in_flight.load()
                      << " messages still in flight\n";
        }
    }

    // Termination broadcast: stop flag plays the per-worker termination
    // channel; workers drain the ready queue and return.
    stop = true;
    ready_cv.notify_all();
    for (auto& t : pool) t.join();
    timer_stop = true;
    timer_cv.notify_all();
    timer_thread.join();

    res.total_core_messages = sent.load();
    res.total_heartbeats = heartbeat_count.load();
    res.duration = last_heartbeat_us.load() + quiet_ms * 1000;
    res.early_fire_warning = early_fire;
    for (auto& log : logs) {
        res.total_delivered += log.delivered;
        res.message_times.insert(res.message_times.end(),
                                 log.delivery_times.begin(),
                                 log.delivery_times.end());
        res.activations.insert(res.activations.end(), log.activations.begin(),
                               log.activations.end());
    }
    for (std::uint64_t t : res.message_times)
        res.last_message_time = std::max(res.last_message_time, t);

    res.final_cores.core.resize(n);
    for (VertexId u = 0; u < n; ++u) {
        res.final_cores.core[u] = actors[u].state.estimate;
        if (actors[u].state.active) ++res.final_active_count;
    }
    return res;
}

} // namespace corekit
