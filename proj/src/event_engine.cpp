#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

#include "corekit/engine.hpp"

namespace corekit {

namespace {

struct Delivery {
    std::uint64_t time;
    std::uint64_t seq;   // FIFO tie-break within a tick
    VertexId to;
    Message msg;
};

struct DeliveryLater {
    bool operator()(const Delivery& a, const Delivery& b) const {
        if (a.time != b.time) return a.time > b.time;
        return a.seq > b.seq;
    }
};

// FNV-1a over the ordered delivery log.
struct TraceDigest {
    std::uint64_t h = 14695981039346656037ull;
    void mix(std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (i * 8)) & 0xff;
            h *= 1099511628211ull;
        }
    }
    void event(std::uint64_t time, VertexId from, VertexId to, std::uint32_t core) {
        mix(time);
        mix((static_cast<std::uint64_t>(from) << 32) | to);
        mix(core);
    }
};

} // namespace

SimResult run_event(const Graph& g, const SimConfig& config) {
    config.validate();
    const std::uint64_t quiet = config.effective_quiet_period();

    std::mt19937_64 rng(config.rng_seed);
    std::priority_queue<Delivery, std::vector<Delivery>, DeliveryLater> queue;
    std::uint64_t seq = 0;

    SimResult res;
    res.virtual_time = true;

    std::vector<VertexState> states;
    states.reserve(g.n());
    for (VertexId u = 0; u < g.n(); ++u)
        states.push_back(init_state(u, static_cast<std::uint32_t>(g.degree(u))));

    std::uint64_t last_heartbeat = 0;
    auto heartbeat = [&](std::uint64_t t) {
        ++res.total_heartbeats;
        last_heartbeat = std::max(last_heartbeat, t);
    };
    auto broadcast = [&](VertexId from, std::uint32_t core, std::uint64_t t) {
        for (VertexId v : g.neighbors(from)) {
            queue.push({t + config.latency.sample(rng), seq++, v, {from, core}});
            ++res.total_core_messages;
        }
    };

    // Initial round: every vertex announces its degree and reports active.
    for (VertexId u = 0; u < g.n(); ++u) {
        res.activations.push_back({0, 0});
        heartbeat(0);
        broadcast(u, states[u].estimate, 0);
        states[u].active = false;  // initial broadcast done
    }

    TraceDigest digest;
    while (!queue.empty()) {
        Delivery d = queue.top();
        queue.pop();
        ++res.total_delivered;
        res.message_times.push_back(d.time);
        res.last_message_time = std::max(res.last_message_time, d.time);
        digest.event(d.time, d.msg.sender, d.to, d.msg.core_number);

        Transition t = handle_message(states[d.to], d.msg);
        if (t.recomputed) {
            res.activations.push_back({d.time, d.time});
            if (!config.heartbeat_on_decrease_only || t.broadcast)
                heartbeat(d.time);
        }
        if (t.broadcast) broadcast(d.to, t.new_estimate, d.time);
    }

    // Quiescent: the watchdog fires exactly one quiet period after the last
    // heartbeat it saw.
    res.duration = last_heartbeat + quiet;
    res.final_cores.core.resize(g.n());
    for (VertexId u = 0; u < g.n(); ++u) {
        res.final_cores.core[u] = states[u].estimate;
        if (states[u].active) ++res.final_active_count;
    }
    res.trace_digest = digest.h;
    if (res.total_delivered != res.total_core_messages)
        throw std::logic_error("event engine lost messages");
    return res;
}

} // namespace corekit
