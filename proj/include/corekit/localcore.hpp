#ifndef COREKIT_LOCALCORE_HPP
#define COREKIT_LOCALCORE_HPP

#include <cstdint>
#include <span>
#include <unordered_map>

#include "corekit/graph.hpp"

namespace corekit {

// (sender, core number) — the only unit exchanged between vertices.
struct Message {
    VertexId sender;
    std::uint32_t core_number;
};

// One worker's local view of the decomposition.
struct VertexState {
    VertexId id = 0;
    std::uint32_t degree = 0;
    std::uint32_t estimate = 0;   // current core estimate, never increases
    std::unordered_map<VertexId, std::uint32_t> stored;  // neighbor -> last estimate
    bool active = true;
    bool seen_all = false;        // received reports from all neighbors
};

struct Transition {
    bool broadcast = false;       // send new estimate to all neighbors
    std::uint32_t new_estimate = 0;
    bool recomputed = false;      // a recomputation was triggered (heartbeat cue)
};

VertexState init_state(VertexId id, std::uint32_t degree);

// Largest k <= current with |{v in stored_values : v >= k}| >= k, found by
// decrementing current while the count condition fails.
std::uint32_t update_core(std::span<const std::uint32_t> stored_values,
                          std::uint32_t current);

// Pure transition for one incoming message. Stores the sender's estimate;
// once all neighbors have reported, every message triggers a recomputation.
// A repeated equal value from the same neighbor carries no information and
// yields no recomputation. Throws std::logic_error on a non-neighbor sender
// (degree bookkeeping would be wrong — a simulation bug).
Transition handle_message(VertexState& state, const Message& msg);

} // namespace corekit

#endif
