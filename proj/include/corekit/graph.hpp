#ifndef COREKIT_GRAPH_HPP
#define COREKIT_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace corekit {

using VertexId = std::uint32_t;

using RawEdge = std::pair<std::string, std::string>;

// Repair counters emitted by data_cleanse.
struct CleanseStats {
    std::uint64_t loops_removed = 0;
    std::uint64_t dups_removed = 0;
    std::uint64_t edges_symmetrized = 0;
    std::uint64_t nodes_added = 0;
};

// Simple undirected graph over dense vertex ids 0..n-1. External labels are
// interned at construction; labels() maps a dense id back to the original id.
// Immutable after construction, safe to share across threads.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::vector<VertexId>> adjacency,
          std::vector<std::string> labels);

    std::size_t n() const { return adj_.size(); }
    std::size_t m() const { return m_; }

    std::span<const VertexId> neighbors(VertexId u) const {
        return adj_[u];
    }
    std::size_t degree(VertexId u) const { return adj_[u].size(); }
    const std::string& label(VertexId u) const { return labels_[u]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::size_t max_degree() const;

    bool has_edge(VertexId u, VertexId v) const;

    // Full-scan invariant check: symmetry, no self-loops, no duplicate
    // neighbors, sorted lists, m consistent with degree sum.
    void check_invariants() const;

private:
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::string> labels_;
    std::size_t m_ = 0;
};

struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    double avg_degree = 0.0;
    std::size_t max_degree = 0;
    bool has_max_core = false;
    std::uint32_t max_core = 0;
};

// Reads "u v" pairs, one per line; '#' lines and blank lines are skipped.
// Throws std::runtime_error naming the line number on a malformed line.
std::vector<RawEdge> parse_edge_list(std::istream& in);

// Builds a cleansed Graph from raw directed edges: drops self-loops,
// collapses duplicates, symmetrizes one-directional edges and materializes
// endpoints that only appear as neighbors. declared_nodes, when non-empty,
// is the set of explicitly declared vertices (adjacency-format keys) used
// for the nodes_added counter.
Graph data_cleanse(const std::vector<RawEdge>& raw_edges,
                   CleanseStats* stats = nullptr,
                   const std::vector<std::string>& declared_nodes = {});

// Integer-id variant used by generators; min_vertices pads the vertex set
// with isolated vertices so ids 0..min_vertices-1 always exist.
Graph data_cleanse_ids(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& raw_edges,
                       std::uint64_t min_vertices,
                       CleanseStats* stats = nullptr);

// Adjacency format: one top-level JSON object, keys are vertex-id strings,
// values are arrays of numeric neighbor ids. Cleansing is applied on load.
Graph parse_adjacency_json(const std::string& text, CleanseStats* stats = nullptr);

// Writer emits keys in ascending numeric order when every label is a
// non-negative integer string, else falls back to dense ids.
std::string write_adjacency_json(const Graph& g);

GraphStats stats(const Graph& g);

Graph gen_cycle(std::size_t n);   // n >= 3
Graph gen_path(std::size_t n);    // n >= 2
Graph gen_complete(std::size_t n);  // n >= 1

// Structural equality on the labeled edge set (used by round-trip checks).
bool graph_equal(const Graph& a, const Graph& b);

} // namespace corekit

#endif
