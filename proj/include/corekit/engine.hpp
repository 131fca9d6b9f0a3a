#ifndef COREKIT_ENGINE_HPP
#define COREKIT_ENGINE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "corekit/graph.hpp"
#include "corekit/localcore.hpp"
#include "corekit/seqcore.hpp"

namespace corekit {

enum class EngineKind { Threaded, Event };

// Per-message channel delay. Units: milliseconds (threaded) or virtual
// ticks (event).
struct LatencyModel {
    enum class Kind { Zero, Fixed, Uniform };
    Kind kind = Kind::Zero;
    std::uint64_t fixed = 0;
    std::uint64_t lo = 0, hi = 0;

    std::uint64_t sample(std::mt19937_64& rng) const;

    static LatencyModel zero() { return {}; }
    static LatencyModel fixed_delay(std::uint64_t d);
    static LatencyModel uniform(std::uint64_t lo, std::uint64_t hi);
    // "zero" | "fixed:D" | "uniform:LO:HI"
    static LatencyModel parse(const std::string& text);
    std::string to_string() const;
};

struct SimConfig {
    EngineKind engine = EngineKind::Event;
    // 0 selects the per-engine default: 100 ms threaded, 1 tick event.
    std::uint64_t heartbeat_period = 0;
    // 0 selects the per-engine default: 2000 ms threaded, 8 ticks event.
    std::uint64_t watchdog_quiet_period = 0;
    std::size_t bins = 8;
    LatencyModel latency;
    std::uint64_t rng_seed = 0;
    bool heartbeat_on_decrease_only = false;
    unsigned max_threads = 0;  // 0 = hardware limit, capped by COREKIT_THREADS

    std::uint64_t effective_heartbeat_period() const;
    std::uint64_t effective_quiet_period() const;
    // Throws std::invalid_argument on quiet <= heartbeat, bins < 1, lo > hi.
    void validate() const;
};

// Half-open activation span [begin, end] in engine time units; zero-width
// spans mark instantaneous processing in the event engine.
struct ActivationSpan {
    std::uint64_t begin;
    std::uint64_t end;
};

struct SimResult {
    CoreMap final_cores;
    std::uint64_t total_core_messages = 0;   // sent (== delivered at quiescence)
    std::uint64_t total_delivered = 0;
    std::uint64_t total_heartbeats = 0;
    std::vector<std::uint64_t> message_times;  // delivery timestamps
    std::vector<ActivationSpan> activations;
    std::uint64_t last_message_time = 0;
    std::uint64_t duration = 0;              // last heartbeat + quiet period
    bool virtual_time = false;               // ticks vs milliseconds
    std::uint64_t trace_digest = 0;          // event engine only
    bool early_fire_warning = false;         // watchdog fired with mail pending
    std::size_t final_active_count = 0;
};

// Runs the full decomposition: initial degree broadcast, message-driven
// convergence, heartbeat/watchdog termination. Dispatches on config.engine.
SimResult run(const Graph& g, const SimConfig& config);

SimResult run_event(const Graph& g, const SimConfig& config);
SimResult run_threaded(const Graph& g, const SimConfig& config);

// Heartbeat instants for one activation span: one at span begin, then one
// every period while still active. Timer arithmetic shared by both engines'
// instrumentation.
std::vector<std::uint64_t> heartbeat_times(const ActivationSpan& span,
                                           std::uint64_t period);

} // namespace corekit

#endif
