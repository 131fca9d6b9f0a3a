#include "corekit/seqcore.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace corekit {

std::uint32_t CoreMap::max_core() const {
    std::uint32_t mx = 0;
    for (auto c : core) mx = std::max(mx, c);
    return mx;
}

CoreMap bz_decompose(const Graph& g) {
    const std::size_t n = g.n();
    CoreMap result;
    result.core.assign(n, 0);
    if (n == 0) return result;

    std::vector<std::uint32_t> deg(n);
    std::size_t max_deg = 0;
    for (VertexId u = 0; u < n; ++u) {
        deg[u] = static_cast<std::uint32_t>(g.degree(u));
        max_deg = std::max<std::size_t>(max_deg, deg[u]);
    }

    // Counting sort of vertices by degree. Equal-degree vertices land in
    // ascending id order.
    std::vector<std::size_t> bin(max_deg + 2, 0);
    for (VertexId u = 0; u < n; ++u) ++bin[deg[u]];
    std::size_t start = 0;
    for (std::size_t d = 0; d <= max_deg; ++d) {
        std::size_t cnt = bin[d];
        bin[d] = start;
        start += cnt;
    }
    std::vector<VertexId> order(n);
    std::vector<std::size_t> pos(n);
    {
        std::vector<std::size_t> next(bin.begin(), bin.end());
        for (VertexId u = 0; u < n; ++u) {
            pos[u] = next[deg[u]]++;
            order[pos[u]] = u;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        VertexId u = order[i];
        result.core[u] = deg[u];
        for (VertexId v : g.neighbors(u)) {
            if (deg[v] <= deg[u]) continue;
            // Move v to the front of its degree bin, then shrink its degree.
            std::size_t pv = pos[v];
            std::size_t pw = bin[deg[v]];
            VertexId w = order[pw];
            if (v != w) {
                std::swap(order[pv], order[pw]);
                pos[v] = pw;
                pos[w] = pv;
            }
            ++bin[deg[v]];
            --deg[v];
        }
    }
    return result;
}

bool verify_locality(const Graph& g, const CoreMap& cores,
                     std::vector<LocalityViolation>* violations) {
    if (cores.size() != g.n())
        throw std::invalid_argument("core map does not cover graph");
    bool ok = true;
    for (VertexId u = 0; u < g.n(); ++u) {
        const std::uint32_t k = cores[u];
        std::size_t ge_k = 0, ge_k1 = 0;
        for (VertexId v : g.neighbors(u)) {
            if (cores[v] >= k) ++ge_k;
            if (cores[v] >= k + 1) ++ge_k1;
        }
        if (k > ge_k || k + 1 <= ge_k1) {
            ok = false;
            if (violations)
                violations->push_back({u, k, ge_k, ge_k1});
        }
    }
    return ok;
}

std::map<std::uint32_t, std::size_t> core_distribution(const CoreMap& cores) {
    std::map<std::uint32_t, std::size_t> hist;
    for (auto c : cores.core) ++hist[c];
    return hist;
}

std::string write_core_table(const Graph& g, const CoreMap& cores) {
    if (cores.size() != g.n())
        throw std::invalid_argument("core map does not cover graph");
    std::ostringstream out;
    out << "vertex,core\n";
    for (VertexId u = 0; u < g.n(); ++u)
        out << g.label(u) << "," << cores[u] << "\n";
    return out.str();
}

std::map<std::string, std::uint32_t> parse_core_table(const std::string& text) {
    std::istringstream in(text);
    std::map<std::string, std::uint32_t> table;
    std::string line;
    bool header = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("core table line " + std::to_string(lineno) +
                                     ": expected vertex,core");
        table[line.substr(0, comma)] =
            static_cast<std::uint32_t>(std::stoul(line.substr(comma + 1)));
    }
    return table;
}

} // namespace corekit
