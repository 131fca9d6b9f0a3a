#include "corekit/localcore.hpp"

#include <stdexcept>
#include <vector>

namespace corekit {

VertexState init_state(VertexId id, std::uint32_t degree) {
    VertexState s;
    s.id = id;
    s.degree = degree;
    s.estimate = degree;
    s.active = true;
    s.seen_all = (degree == 0);
    return s;
}

std::uint32_t update_core(std::span<const std::uint32_t> stored_values,
                          std::uint32_t current) {
    while (current > 0) {
        std::uint32_t ge = 0;
        for (auto v : stored_values)
            if (v >= current) ++ge;
        if (ge >= current) break;
        --current;
    }
    return current;
}

Transition handle_message(VertexState& state, const Message& msg) {
    Transition t;
    auto it = state.stored.find(msg.sender);
    if (it == state.stored.end()) {
        if (state.stored.size() >= state.degree)
            throw std::logic_error("message from non-neighbor vertex");
        state.stored.emplace(msg.sender, msg.core_number);
    } else {
        if (it->second == msg.core_number)
            return t;  // duplicate estimate, nothing to learn
        it->second = msg.core_number;
    }

    if (state.stored.size() >= state.degree) state.seen_all = true;
    if (!state.seen_all) return t;

    state.active = true;
    t.recomputed = true;
    std::vector<std::uint32_t> values;
    values.reserve(state.stored.size());
    for (const auto& [v, k] : state.stored) values.push_back(k);
    std::uint32_t new_core = update_core(values, state.estimate);
    if (new_core < state.estimate) {
        state.estimate = new_core;
        t.broadcast = true;
        t.new_estimate = new_core;
    }
    state.active = false;
    return t;
}

} // namespace corekit
