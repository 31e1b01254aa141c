#pragma once

#include <cstdint>

#include "shotgun/distribution.hpp"
#include "shotgun/graph.hpp"
#include "shotgun/jigsaw.hpp"
#include "shotgun/rng.hpp"

namespace shotgun {

// Upper bound on generated instance size; exceeding it throws BudgetError.
struct GeneratorBudget {
    uint64_t max_vertices = 1ull << 26;
};

class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// d-dimensional side-n lattice with i.i.d. labels; geometry metadata set.
LabeledGraph gen_lattice(uint32_t n, uint32_t d, const LabelDistribution& dist, Seed seed,
                         const GeneratorBudget& budget = {});

// G(N, p); all labels identical (single-letter alphabet). Sparse p uses
// geometric gap-skipping over the pair index, dense p per-pair Bernoulli
// draws; the two regimes produce identically distributed graphs, not
// identical streams.
LabeledGraph gen_er(uint32_t N, double p, Seed seed, const GeneratorBudget& budget = {});

// G(N, p) plus i.i.d. labels from dist. With q = 1 the edge stream matches
// gen_er exactly for the same seed.
LabeledGraph gen_labeled_er(uint32_t N, double p, const LabelDistribution& dist, Seed seed,
                            const GeneratorBudget& budget = {});

// Full binary tree with 2^levels leaves (2^(levels+1) - 1 vertices, heap
// order: children of i are 2i+1, 2i+2), uniform i.i.d. labels over q.
LabeledGraph gen_binary_tree(uint32_t levels, uint32_t q, Seed seed,
                             const GeneratorBudget& budget = {});

// n x n puzzle; every edge slot independently uniform over q colors.
Puzzle gen_jigsaw(uint32_t n, uint32_t q, Seed seed, const GeneratorBudget& budget = {});

}  // namespace shotgun
