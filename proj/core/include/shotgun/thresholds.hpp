#pragma once

#include <cstdint>
#include <optional>

#include "shotgun/graph.hpp"

namespace shotgun {

// The dual branch value x in (0,1) with x e^-x = lambda e^-lambda, for
// lambda > 1. Bisection on (0,1), residual <= 1e-12.
double solve_lambda_star(double lambda);

// Finite-size placements of the asymptotic identifiability boundaries,
// used to center sweep grids.
struct LatticePrediction {
    uint32_t r_low;   // floor of the blocking-side boundary
    uint32_t r_high;  // ceil of the uniqueness-side boundary
};
LatticePrediction predict_lattice_threshold(uint32_t n, uint32_t d, uint32_t q);

struct ErPrediction {
    uint32_t r_low;                    // below this, blocking patterns dominate
    std::optional<uint32_t> r_high;    // diameter-based sufficiency; absent at lambda = 1
    bool critical = false;             // lambda == 1: open territory, only r_low returned
};
ErPrediction predict_er_threshold(uint32_t N, double lambda);

struct JigsawPrediction {
    uint32_t q_block;     // blocking regime boundary: floor(n^(2/3))
    uint64_t q_assemble;  // assembly regime boundary: n^2
};
JigsawPrediction predict_jigsaw_threshold(uint32_t n);

// Exact max over components of the graph diameter, via per-component
// all-sources BFS. Work is O(sum |C| * |E_C|); `max_bfs` caps the number of
// BFS runs and throws BudgetExceeded beyond.
uint32_t max_component_diameter(const LabeledGraph& g, uint64_t max_bfs = 1ull << 22);

}  // namespace shotgun
