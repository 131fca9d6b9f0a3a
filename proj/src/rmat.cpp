#include "corekit/rmat.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace corekit {

void RmatParams::validate() const {
    if (n_target < 2) throw std::invalid_argument("rmat: n_target must be >= 2");
    if (edge_factor < 1) throw std::invalid_argument("rmat: edge_factor must be >= 1");
    if (std::abs(a + b + c + d - 1.0) > 1e-9)
        throw std::invalid_argument("rmat: quadrant probabilities must sum to 1");
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::invalid_argument("rmat: negative quadrant probability");
}

Graph rmat_generate(const RmatParams& p, CleanseStats* stats) {
    p.validate();

    int scale = 0;
    while ((1ull << scale) < p.n_target) ++scale;

    std::mt19937_64 rng(p.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const std::uint64_t samples = p.n_target * p.edge_factor;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    edges.reserve(samples);
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::uint64_t row = 0, col = 0;
        for (int level = 0; level < scale; ++level) {
            const double r = unit(rng);
            row <<= 1;
            col <<= 1;
            if (r < p.a) {
                // top-left
            } else if (r < p.a + p.b) {
                col |= 1;
            } else if (r < p.a + p.b + p.c) {
                row |= 1;
            } else {
                row |= 1;
                col |= 1;
            }
        }
        if (row >= p.n_target || col >= p.n_target) continue;  // padded region
        edges.emplace_back(row, col);
    }
    return data_cleanse_ids(edges, p.n_target, stats);
}

} // namespace corekit
