#include "corekit/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace corekit {

namespace {

bool is_numeric_label(const std::string& s) {
    if (s.empty() || s.size() > 19) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

// Numeric-aware label ordering: if both labels are non-negative integer
// strings compare by value, otherwise lexicographically. Interning in this
// order makes the dense ids a pure function of the vertex set.
bool label_less(const std::string& a, const std::string& b) {
    const bool na = is_numeric_label(a), nb = is_numeric_label(b);
    if (na && nb) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
    if (na != nb) return na;  // numeric labels sort first
    return a < b;
}

} // namespace

Graph::Graph(std::vector<std::vector<VertexId>> adjacency,
             std::vector<std::string> labels)
    : adj_(std::move(adjacency)), labels_(std::move(labels)) {
    if (adj_.size() != labels_.size())
        throw std::invalid_argument("adjacency/label size mismatch");
    std::size_t deg_sum = 0;
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        deg_sum += nbrs.size();
    }
    m_ = deg_sum / 2;
    check_invariants();
}

std::size_t Graph::max_degree() const {
    std::size_t d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, nbrs.size());
    return d;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

void Graph::check_invariants() const {
    std::size_t deg_sum = 0;
    for (VertexId u = 0; u < adj_.size(); ++u) {
        const auto& nbrs = adj_[u];
        deg_sum += nbrs.size();
        if (!std::is_sorted(nbrs.begin(), nbrs.end()))
            throw std::logic_error("neighbor list not sorted");
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            VertexId v = nbrs[i];
            if (v == u) throw std::logic_error("self-loop");
            if (v >= adj_.size()) throw std::logic_error("neighbor id out of range");
            if (i > 0 && nbrs[i - 1] == v) throw std::logic_error("duplicate neighbor");
            if (!has_edge(v, u)) throw std::logic_error("asymmetric edge");
        }
    }
    if (deg_sum % 2 != 0 || deg_sum / 2 != m_)
        throw std::logic_error("edge count inconsistent with degree sum");
}

std::vector<RawEdge> parse_edge_list(std::istream& in) {
    std::vector<RawEdge> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;          // blank line
        if (a[0] == '#') continue;         // comment
        if (!(ls >> b) || (ls >> extra)) {
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": expected two tokens");
        }
        edges.emplace_back(std::move(a), std::move(b));
    }
    return edges;
}

Graph data_cleanse(const std::vector<RawEdge>& raw_edges,
                   CleanseStats* stats,
                   const std::vector<std::string>& declared_nodes) {
    CleanseStats cs;

    std::set<std::string, bool (*)(const std::string&, const std::string&)>
        label_set(label_less);
    for (const auto& [a, b] : raw_edges) {
        label_set.insert(a);
        label_set.insert(b);
    }
    for (const auto& d : declared_nodes) label_set.insert(d);

    std::vector<std::string> labels(label_set.begin(), label_set.end());
    std::unordered_map<std::string, VertexId> id_of;
    id_of.reserve(labels.size());
    for (VertexId i = 0; i < labels.size(); ++i) id_of[labels[i]] = i;

    if (!declared_nodes.empty()) {
        std::unordered_set<std::string> declared(declared_nodes.begin(),
                                                 declared_nodes.end());
        for (const auto& l : labels)
            if (!declared.count(l)) ++cs.nodes_added;
    }

    const std::size_t n = labels.size();
    std::vector<std::set<VertexId>> adj(n);
    std::uint64_t raw_non_loop = 0;
    std::uint64_t directed_present = 0;  // distinct ordered pairs, counted once
    std::set<std::pair<VertexId, VertexId>> seen_directed;
    for (const auto& [a, b] : raw_edges) {
        VertexId u = id_of[a], v = id_of[b];
        if (u == v) {
            ++cs.loops_removed;
            continue;
        }
        ++raw_non_loop;
        if (seen_directed.emplace(u, v).second) ++directed_present;
        adj[u].insert(v);
        adj[v].insert(u);
    }

    std::uint64_t undirected = 0, symmetrized = 0;
    for (const auto& [u, v] : seen_directed) {
        if (u < v || !seen_directed.count({v, u})) {
            ++undirected;
            if (!seen_directed.count({v, u})) ++symmetrized;
        }
    }
    cs.edges_symmetrized = symmetrized;
    cs.dups_removed = raw_non_loop - undirected;

    std::vector<std::vector<VertexId>> adj_vec(n);
    for (std::size_t u = 0; u < n; ++u)
        adj_vec[u].assign(adj[u].begin(), adj[u].end());

    if (stats) *stats = cs;
    return Graph(std::move(adj_vec), std::move(labels));
}

Graph data_cleanse_ids(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& raw_edges,
                       std::uint64_t min_vertices,
                       CleanseStats* stats) {
    CleanseStats cs;
    std::uint64_t max_id = min_vertices == 0 ? 0 : min_vertices - 1;
    for (const auto& [a, b] : raw_edges) max_id = std::max({max_id, a, b});
    const std::size_t n = raw_edges.empty() && min_vertices == 0
                              ? 0
                              : static_cast<std::size_t>(max_id) + 1;

    std::vector<std::set<VertexId>> adj(n);
    for (const auto& [a, b] : raw_edges) {
        if (a == b) {
            ++cs.loops_removed;
            continue;
        }
        auto u = static_cast<VertexId>(a), v = static_cast<VertexId>(b);
        bool fresh = adj[u].insert(v).second;
        adj[v].insert(u);
        if (!fresh) ++cs.dups_removed;
    }

    std::vector<std::vector<VertexId>> adj_vec(n);
    std::vector<std::string> labels(n);
    for (std::size_t u = 0; u < n; ++u) {
        adj_vec[u].assign(adj[u].begin(), adj[u].end());
        labels[u] = std::to_string(u);
    }
    if (stats) *stats = cs;
    return Graph(std::move(adj_vec), std::move(labels));
}

Graph parse_adjacency_json(const std::string& text, CleanseStats* stats) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("adjacency parse error: ") + e.what());
    }
    if (!j.is_object())
        throw std::runtime_error("adjacency root must be an object");

    std::vector<RawEdge> edges;
    std::vector<std::string> declared;
    for (auto it = j.begin(); it != j.end(); ++it) {
        declared.push_back(it.key());
        if (!it.value().is_array())
            throw std::runtime_error("adjacency value for '" + it.key() +
                                     "' must be an array");
        for (const auto& nb : it.value()) {
            if (!nb.is_number_integer() && !nb.is_number_unsigned())
                throw std::runtime_error("non-numeric neighbor under '" +
                                         it.key() + "'");
            edges.emplace_back(it.key(),
                               std::to_string(nb.get<std::int64_t>()));
        }
    }
    return data_cleanse(edges, stats, declared);
}

std::string write_adjacency_json(const Graph& g) {
    bool all_numeric = true;
    for (const auto& l : g.labels())
        if (!is_numeric_label(l)) { all_numeric = false; break; }

    // Interning keeps numeric labels in ascending value order, so dense-id
    // order is already the required key order.
    std::ostringstream out;
    out << "{";
    for (VertexId u = 0; u < g.n(); ++u) {
        if (u > 0) out << ",";
        out << "\"" << (all_numeric ? g.label(u) : std::to_string(u)) << "\":[";
        bool first = true;
        for (VertexId v : g.neighbors(u)) {
            if (!first) out << ",";
            out << (all_numeric ? g.label(v) : std::to_string(v));
            first = false;
        }
        out << "]";
    }
    out << "}";
    return out.str();
}

GraphStats stats(const Graph& g) {
    GraphStats s;
    s.n = g.n();
    s.m = g.m();
    s.max_degree = g.max_degree();
    s.avg_degree = s.n == 0 ? 0.0 : 2.0 * static_cast<double>(s.m) / static_cast<double>(s.n);
    return s;
}

namespace {
Graph from_undirected_pairs(std::size_t n,
                            const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::vector<std::vector<VertexId>> adj(n);
    std::vector<std::string> labels(n);
    for (std::size_t u = 0; u < n; ++u) labels[u] = std::to_string(u);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return Graph(std::move(adj), std::move(labels));
}
} // namespace

Graph gen_cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("gen_cycle requires n >= 3");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<VertexId>(i),
                           static_cast<VertexId>((i + 1) % n));
    return from_undirected_pairs(n, edges);
}

Graph gen_path(std::size_t n) {
    if (n < 2) throw std::invalid_argument("gen_path requires n >= 2");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(static_cast<VertexId>(i),
                           static_cast<VertexId>(i + 1));
    return from_undirected_pairs(n, edges);
}

Graph gen_complete(std::size_t n) {
    if (n < 1) throw std::invalid_argument("gen_complete requires n >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.emplace_back(static_cast<VertexId>(i),
                               static_cast<VertexId>(j));
    return from_undirected_pairs(n, edges);
}

bool graph_equal(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::set<std::pair<std::string, std::string>> ea, eb;
    auto collect = [](const Graph& g, std::set<std::pair<std::string, std::string>>& out) {
        for (VertexId u = 0; u < g.n(); ++u)
            for (VertexId v : g.neighbors(u))
                if (u < v) out.emplace(g.label(u), g.label(v));
    };
    collect(a, ea);
    collect(b, eb);
    if (ea != eb) return false;
    std::set<std::string> la(a.labels().begin(), a.labels().end());
    std::set<std::string> lb(b.labels().begin(), b.labels().end());
    return la == lb;
}

} // namespace corekit
