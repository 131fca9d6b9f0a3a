#ifndef COREKIT_RMAT_HPP
#define COREKIT_RMAT_HPP

#include <cstdint>

#include "corekit/graph.hpp"

namespace corekit {

// Recursive-matrix generator parameters; Graph500 quadrant defaults.
struct RmatParams {
    std::uint64_t n_target = 0;
    std::uint64_t edge_factor = 8;
    double a = 0.57, b = 0.19, c = 0.19, d = 0.05;
    std::uint64_t seed = 0;

    // n_target >= 2, probabilities sum to 1 within 1e-9.
    void validate() const;
};

// Samples n_target * edge_factor directed edges by quadrant descent over the
// next power-of-two square, drops endpoints >= n_target, and cleanses. All
// of 0..n_target-1 exist as vertices (isolated ones carry core 0).
// Deterministic under (params, seed).
Graph rmat_generate(const RmatParams& params, CleanseStats* stats = nullptr);

} // namespace corekit

#endif
