#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "shotgun/graph.hpp"
#include "shotgun/rng.hpp"

namespace shotgun {

// Coupon-collector upper bound on the samples needed to see every one of N
// neighborhoods with failure probability epsilon: ceil(N ln N - N ln eps).
uint64_t m_rec_upper(uint64_t N, double epsilon);

// Second-moment lower bound: the largest M for which
//   (sum_i (1 - s_i/N)^M)^2 / sum_{i,j} (1 - u_ij/N)^M >= epsilon,
// where s_i = |ball_i| and u_ij = |ball_i  u  ball_j|. The ratio is searched
// by exponential bracketing plus binary search (the profile is checked for
// monotonicity in tests); returns 0 when even M = 1 fails or a ball covers
// everything.
uint64_t m_rec_lower_general(const std::vector<uint64_t>& sizes,
                             const std::function<uint64_t(size_t, size_t)>& pair_union_size,
                             uint64_t N, double epsilon);

// Convenience: balls and unions from a graph at radius r.
uint64_t m_rec_lower_general(const LabeledGraph& g, uint32_t radius, double epsilon);

// Lattice closed form: floor of
//   [ln(1/eps - 1) - ln((2r-1)^d / N)] / (-ln(1 - r^d / N)).
uint64_t m_rec_lower_lattice(uint64_t N, uint32_t r, uint32_t d, double epsilon);

// Fraction of trials in which M uniform draws (with replacement) from the N
// neighborhoods collect all of them; the coverage criterion is the operative
// reconstruction-success condition under overlap uniqueness. Evaluated on a
// whole grid of M values per trial over a shared draw stream, so the curve
// is monotone in M by construction.
std::vector<double> simulate_sampling_grid(uint64_t N, const std::vector<uint64_t>& m_grid,
                                           uint32_t trials, Seed seed);
double simulate_sampling(uint64_t N, uint64_t M, uint32_t trials, Seed seed);

}  // namespace shotgun
