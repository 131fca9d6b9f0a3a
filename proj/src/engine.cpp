#include "corekit/engine.hpp"

#include <stdexcept>

namespace corekit {

std::uint64_t LatencyModel::sample(std::mt19937_64& rng) const {
    switch (kind) {
        case Kind::Zero: return 0;
        case Kind::Fixed: return fixed;
        case Kind::Uniform:
            return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
    }
    return 0;
}

LatencyModel LatencyModel::fixed_delay(std::uint64_t d) {
    LatencyModel m;
    m.kind = Kind::Fixed;
    m.fixed = d;
    return m;
}

LatencyModel LatencyModel::uniform(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw std::invalid_argument("latency: lo > hi");
    LatencyModel m;
    m.kind = Kind::Uniform;
    m.lo = lo;
    m.hi = hi;
    return m;
}

LatencyModel LatencyModel::parse(const std::string& text) {
    if (text == "zero") return zero();
    if (text.rfind("fixed:", 0) == 0)
        return fixed_delay(std::stoull(text.substr(6)));
    if (text.rfind("uniform:", 0) == 0) {
        auto rest = text.substr(8);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("latency: expected uniform:LO:HI");
        return uniform(std::stoull(rest.substr(0, colon)),
                       std::stoull(rest.substr(colon + 1)));
    }
    throw std::invalid_argument("unknown latency model: " + text);
}

std::string LatencyModel::to_string() const {
    switch (kind) {
        case Kind::Zero: return "zero";
        case Kind::Fixed: return "fixed:" + std::to_string(fixed);
        case Kind::Uniform:
            return "uniform:" + std::to_string(lo) + ":" + std::to_string(hi);
    }
    return "zero";
}

std::uint64_t SimConfig::effective_heartbeat_period() const {
    if (heartbeat_period != 0) return heartbeat_period;
    return engine == EngineKind::Threaded ? 100 : 1;
}

std::uint64_t SimConfig::effective_quiet_period() const {
    if (watchdog_quiet_period != 0) return watchdog_quiet_period;
    return engine == EngineKind::Threaded ? 2000 : 8;
}

void SimConfig::validate() const {
    if (bins < 1) throw std::invalid_argument("bins must be >= 1");
    if (effective_quiet_period() <= effective_heartbeat_period())
        throw std::invalid_argument("watchdog quiet period must exceed heartbeat period");
    if (latency.kind == LatencyModel::Kind::Uniform && latency.lo > latency.hi)
        throw std::invalid_argument("latency: lo > hi");
}

SimResult run(const Graph& g, const SimConfig& config) {
    config.validate();
    return config.engine == EngineKind::Event ? run_event(g, config)
                                              : run_threaded(g, config);
}

std::vector<std::uint64_t> heartbeat_times(const ActivationSpan& span,
                                           std::uint64_t period) {
    if (period == 0) throw std::invalid_argument("heartbeat period must be > 0");
    std::vector<std::uint64_t> times;
    std::uint64_t t = span.begin;
    while (true) {
        times.push_back(t);
        if (span.end - t < period) break;
        t += period;
    }
    return times;
}

} // namespace corekit
