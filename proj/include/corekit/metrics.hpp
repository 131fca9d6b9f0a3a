#ifndef COREKIT_METRICS_HPP
#define COREKIT_METRICS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "corekit/engine.hpp"
#include "corekit/graph.hpp"
#include "corekit/seqcore.hpp"

namespace corekit {

struct MetricsReport {
    std::string graph_name;
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t total_core_messages = 0;
    std::uint64_t total_heartbeats = 0;
    std::vector<std::uint64_t> per_bin_messages;
    std::vector<std::size_t> per_bin_active;
    double duration = 0.0;
    std::string duration_unit;       // "ms" or "ticks"
    std::uint64_t bound_value = 0;   // sum deg*(deg - core + 1)
    std::uint32_t max_core = 0;
    std::size_t runs = 1;
    double duration_mean = 0.0;
    double duration_ci95 = 0.0;      // half-width, Student-t
};

// Event at time t lands in bin floor(bins*(t-start)/(end-start)), clamped to
// the last bin at t == end. A degenerate (empty) interval puts everything in
// bin 0.
std::vector<std::uint64_t> bin_events(std::span<const std::uint64_t> events,
                                      std::uint64_t run_start,
                                      std::uint64_t run_end,
                                      std::size_t bins);

// Samples vertex activity at each bin's start instant over [run_start,
// run_end]; an interval counts at a sample point it contains (inclusive).
std::vector<std::size_t> active_series(std::span<const ActivationSpan> spans,
                                       std::uint64_t run_start,
                                       std::uint64_t run_end,
                                       std::size_t bins);

// Analytical message ceiling: sum over u of deg(u) * (deg(u) - core(u) + 1)
// — one broadcast per possible estimate decrease plus the initial round.
std::uint64_t message_bound(const Graph& g, const CoreMap& cores);

// Bins a finished run over [0, last core-message delivery].
MetricsReport build_report(const std::string& name, const Graph& g,
                           const SimResult& result, std::size_t bins);

struct DurationSummary {
    double mean = 0.0;
    double ci95 = 0.0;  // 95% half-width, Student-t; 0 for a single run
};
DurationSummary summarize_durations(std::span<const double> durations);

enum class ReportFormat { Structured, Tabular };

// Structured: one JSON object with every MetricsReport field. Tabular: CSV
// with header rows; pass which series via the tabular_* helpers below.
std::string export_report(const MetricsReport& report, ReportFormat format);

std::string tabular_messages_per_bin(const MetricsReport& report);
std::string tabular_active_per_bin(const MetricsReport& report);
std::string tabular_totals(const MetricsReport& report);

MetricsReport import_report(const std::string& structured_text);

} // namespace corekit

#endif
