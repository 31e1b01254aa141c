#pragma once

#include <cstdint>
#include <optional>

#include "shotgun/distribution.hpp"

namespace shotgun {

// Expected number of ordered blocking pairs on the d-dimensional side-n
// lattice with uniform labels over q: pairs of side-(2r-1) boxes anchored on
// the (2r-1)-grid, labels equal except the centers. The anchored-pair count
// is exact ((floor((n-(2r-1))/(2r-1))+1)^d boxes); the per-pair probability
// is q^-((2r-1)^d - 1) * (1 - 1/q).
double expected_lattice_blocking(uint32_t n, uint32_t d, uint32_t r, uint32_t q);

// Anchored box count used above, exposed for the detector and tests.
uint64_t lattice_blocking_anchor_count(uint32_t n, uint32_t d, uint32_t r);

// Expected number of equal-label pairs of side-(r-1) boxes. Uniform mode
// evaluates ((n-r)^{2d} - 1) * q^-((r-1)^d) verbatim; a distribution switches
// to the moment bound n^{2d} P2^{(r-1)^d} + 4 r^d n^d P2^{(r-1)^d / 2}.
double expected_lattice_pair_collisions(uint32_t n, uint32_t d, uint32_t r, uint32_t q);
double expected_lattice_pair_collisions(uint32_t n, uint32_t d, uint32_t r,
                                        const LabelDistribution& dist);

// Expected count of two-component blocking patterns in G(N, p) at radius r:
// one bare line on 2r+1 vertices plus one line with two pendant prongs at
// each end, both as full components. Computed in log space; overflow-safe.
// With `conditioned` true, evaluates the mean conditioned on one occurrence
// (N replaced by N - 4r - 6 outside p), the second-moment diagnostic.
double expected_er_blocking(uint32_t N, uint32_t r, double p, bool conditioned = false);

// (E B)^2 / E B^2 lower-bound ratio for the pattern count above, in log space.
double er_second_moment_ratio(uint32_t N, uint32_t r, double p);

// Upper bound 2^{2(levels-2)} q^-2 (1 - q^-3) on the expected number of
// ordered cherry-blocking pairs in the labeled full binary tree.
double expected_tree_blocking_bound(uint32_t levels, uint32_t q);

// Exact expectation of the ordered cherry-blocking pair count the tree
// detector reports (left-child restriction).
double expected_tree_blocking_exact(uint32_t levels, uint32_t q);

}  // namespace shotgun
