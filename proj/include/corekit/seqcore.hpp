#ifndef COREKIT_SEQCORE_HPP
#define COREKIT_SEQCORE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "corekit/graph.hpp"

namespace corekit {

// Core number per dense vertex id.
struct CoreMap {
    std::vector<std::uint32_t> core;

    std::uint32_t operator[](VertexId u) const { return core[u]; }
    std::size_t size() const { return core.size(); }
    std::uint32_t max_core() const;

    bool operator==(const CoreMap&) const = default;
};

struct LocalityViolation {
    VertexId vertex;
    std::uint32_t core;
    std::size_t count_ge_k;      // |{v in adj : core[v] >= k}|
    std::size_t count_ge_k1;     // |{v in adj : core[v] >= k+1}|
};

// Sequential bucket-based peeling. O(n+m): vertices are kept in an array
// ordered by current degree with per-degree bin starts; removing a vertex
// swaps it to its bin front and advances the bin. Ties break by ascending
// vertex id. The black-box oracle for every engine run.
CoreMap bz_decompose(const Graph& g);

// Checks both locality inequalities for every vertex:
//   k <= |{v in adj : core[v] >= k}|  and  k+1 > |{v in adj : core[v] >= k+1}|.
// Throws std::invalid_argument if core_map does not cover the graph.
bool verify_locality(const Graph& g, const CoreMap& cores,
                     std::vector<LocalityViolation>* violations = nullptr);

// core number -> vertex count
std::map<std::uint32_t, std::size_t> core_distribution(const CoreMap& cores);

// "vertex,core" table with header, rows in dense-id order (ascending
// numeric label order for numeric graphs).
std::string write_core_table(const Graph& g, const CoreMap& cores);

// Parses a core table back to label -> core.
std::map<std::string, std::uint32_t> parse_core_table(const std::string& text);

} // namespace corekit

#endif
