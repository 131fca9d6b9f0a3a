#include "corekit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace corekit {

std::vector<std::uint64_t> bin_events(std::span<const std::uint64_t> events,
                                      std::uint64_t run_start,
                                      std::uint64_t run_end,
                                      std::size_t bins) {
    if (bins < 1) throw std::invalid_argument("bins must be >= 1");
    std::vector<std::uint64_t> counts(bins, 0);
    if (run_end <= run_start) {
        // Degenerate interval: everything lands in bin 0.
        counts[0] = events.size();
        return counts;
    }
    const double span = static_cast<double>(run_end - run_start);
    for (std::uint64_t t : events) {
        auto b = static_cast<std::size_t>(
            static_cast<double>(bins) * (static_cast<double>(t - run_start) / span));
        if (b >= bins) b = bins - 1;
        ++counts[b];
    }
    return counts;
}

std::vector<std::size_t> active_series(std::span<const ActivationSpan> spans,
                                       std::uint64_t run_start,
                                       std::uint64_t run_end,
                                       std::size_t bins) {
    if (bins < 1) throw std::invalid_argument("bins must be >= 1");
    std::vector<std::size_t> counts(bins, 0);
    const double width = run_end > run_start
                             ? static_cast<double>(run_end - run_start) /
                                   static_cast<double>(bins)
                             : 0.0;
    for (std::size_t b = 0; b < bins; ++b) {
        const auto sample = run_start + static_cast<std::uint64_t>(
                                            width * static_cast<double>(b));
        for (const auto& s : spans)
            if (s.begin <= sample && sample <= s.end) ++counts[b];
    }
    return counts;
}

std::uint64_t message_bound(const Graph& g, const CoreMap& cores) {
    if (cores.size() != g.n())
        throw std::invalid_argument("core map does not cover graph");
    std::uint64_t total = 0;
    for (VertexId u = 0; u < g.n(); ++u) {
        const std::uint64_t deg = g.degree(u);
        total += deg * (deg - cores[u] + 1);
    }
    return total;
}

MetricsReport build_report(const std::string& name, const Graph& g,
                           const SimResult& result, std::size_t bins) {
    MetricsReport r;
    r.graph_name = name;
    r.n = g.n();
    r.m = g.m();
    r.total_core_messages = result.total_core_messages;
    r.total_heartbeats = result.total_heartbeats;
    r.per_bin_messages =
        bin_events(result.message_times, 0, result.last_message_time, bins);
    r.per_bin_active =
        active_series(result.activations, 0, result.last_message_time, bins);
    r.duration = static_cast<double>(result.duration);
    r.duration_unit = result.virtual_time ? "ticks" : "ms";
    if (!result.virtual_time) r.duration /= 1000.0;  // microseconds -> ms
    r.bound_value = message_bound(g, result.final_cores);
    r.max_core = result.final_cores.max_core();
    r.runs = 1;
    r.duration_mean = r.duration;
    r.duration_ci95 = 0.0;
    return r;
}

namespace {
// Two-sided 97.5% Student-t critical values, df 1..30; 1.96 beyond.
constexpr double kT975[] = {
    12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
    2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
    2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};

double t975(std::size_t df) {
    if (df == 0) return 0.0;
    if (df <= 30) return kT975[df - 1];
    return 1.96;
}
} // namespace

DurationSummary summarize_durations(std::span<const double> durations) {
    DurationSummary s;
    const std::size_t n = durations.size();
    if (n == 0) return s;
    double sum = 0.0;
    for (double d : durations) sum += d;
    s.mean = sum / static_cast<double>(n);
    if (n < 2) return s;
    double ss = 0.0;
    for (double d : durations) ss += (d - s.mean) * (d - s.mean);
    const double stderr_ = std::sqrt(ss / static_cast<double>(n - 1)) /
                           std::sqrt(static_cast<double>(n));
    s.ci95 = t975(n - 1) * stderr_;
    return s;
}

std::string export_report(const MetricsReport& r, ReportFormat format) {
    if (format == ReportFormat::Structured) {
        nlohmann::json j;
        j["graph_name"] = r.graph_name;
        j["n"] = r.n;
        j["m"] = r.m;
        j["total_core_messages"] = r.total_core_messages;
        j["total_heartbeats"] = r.total_heartbeats;
        j["per_bin_messages"] = r.per_bin_messages;
        j["per_bin_active"] = r.per_bin_active;
        j["duration"] = r.duration;
        j["duration_unit"] = r.duration_unit;
        j["bound_value"] = r.bound_value;
        j["max_core"] = r.max_core;
        j["runs"] = r.runs;
        j["duration_mean"] = r.duration_mean;
        j["duration_ci95"] = r.duration_ci95;
        return j.dump(2) + "\n";
    }
    if (format == ReportFormat::Tabular) {
        return tabular_messages_per_bin(r) + tabular_active_per_bin(r) +
               tabular_totals(r);
    }
    throw std::invalid_argument("unknown report format");
}

std::string tabular_messages_per_bin(const MetricsReport& r) {
    std::ostringstream out;
    out << "bin,messages\n";
    for (std::size_t b = 0; b < r.per_bin_messages.size(); ++b)
        out << b << "," << r.per_bin_messages[b] << "\n";
    return out.str();
}

std::string tabular_active_per_bin(const MetricsReport& r) {
    std::ostringstream out;
    out << "bin,active\n";
    for (std::size_t b = 0; b < r.per_bin_active.size(); ++b)
        out << b << "," << r.per_bin_active[b] << "\n";
    return out.str();
}

std::string tabular_totals(const MetricsReport& r) {
    std::ostringstream out;
    out << "graph,n,m,total_core_messages,total_heartbeats,bound_value,max_core,"
           "duration,duration_unit,runs,duration_mean,duration_ci95\n";
    out << r.graph_name << "," << r.n << "," << r.m << ","
        << r.total_core_messages << "," << r.total_heartbeats << ","
        << r.bound_value << "," << r.max_core << "," << r.duration << ","
        << r.duration_unit << "," << r.runs << "," << r.duration_mean << ","
        << r.duration_ci95 << "\n";
    return out.str();
}

MetricsReport import_report(const std::string& structured_text) {
    nlohmann::json j = nlohmann::json::parse(structured_text);
    MetricsReport r;
    r.graph_name = j.at("graph_name").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    r.total_core_messages = j.at("total_core_messages").get<std::uint64_t>();
    r.total_heartbeats = j.at("total_heartbeats").get<std::uint64_t>();
    r.per_bin_messages = j.at("per_bin_messages").get<std::vector<std::uint64_t>>();
    r.per_bin_active = j.at("per_bin_active").get<std::vector<std::size_t>>();
    r.duration = j.at("duration").get<double>();
    r.duration_unit = j.at("duration_unit").get<std::string>();
    r.bound_value = j.at("bound_value").get<std::uint64_t>();
    r.max_core = j.at("max_core").get<std::uint32_t>();
    r.runs = j.at("runs").get<std::size_t>();
    r.duration_mean = j.at("duration_mean").get<double>();
    r.duration_ci95 = j.at("duration_ci95").get<double>();
    return r;
}

} // namespace corekit
