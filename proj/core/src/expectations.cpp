#include "shotgun/expectations.hpp"

#include <cmath>
#include <stdexcept>

namespace shotgun {

namespace {

double ipow(double base, uint32_t e) {
    double acc = 1.0;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

uint64_t upow(uint64_t base, uint32_t e) {
    uint64_t acc = 1;
    for (uint32_t i = 0; i < e; ++i) acc *= base;
    return acc;
}

double log_binom(uint32_t n, uint32_t k) {
    if (k > n) return -INFINITY;
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

uint64_t lattice_blocking_anchor_count(uint32_t n, uint32_t d, uint32_t r) {
    uint32_t side = 2 * r - 1;
    if (side > n) return 0;
    uint64_t per_axis = (n - side) / side + 1;
    return upow(per_axis, d);
}

double expected_lattice_blocking(uint32_t n, uint32_t d, uint32_t r, uint32_t q) {
    if (n < 1 || d < 1 || r < 1 || q < 1)
        throw std::invalid_argument("expected_lattice_blocking: bad parameters");
    uint64_t anchors = lattice_blocking_anchor_count(n, d, r);
    if (anchors < 2) return 0.0;
    double pairs = static_cast<double>(anchors) * static_cast<double>(anchors - 1);
    uint64_t cells = upow(2 * r - 1, d);
    double per_pair = ipow(1.0 / q, static_cast<uint32_t>(cells - 1)) * (1.0 - 1.0 / q);
    return pairs * per_pair;
}

double expected_lattice_pair_collisions(uint32_t n, uint32_t d, uint32_t r, uint32_t q) {
    if (n <= r) throw std::invalid_argument("expected_lattice_pair_collisions: need n > r");
    double pairs = ipow(static_cast<double>(n - r), 2 * d) - 1.0;
    uint64_t cells = upow(r - 1, d);  // r = 1 gives empty boxes, probability 1
    return pairs * ipow(1.0 / q, static_cast<uint32_t>(cells));
}

double expected_lattice_pair_collisions(uint32_t n, uint32_t d, uint32_t r,
                                        const LabelDistribution& dist) {
    double p2 = dist.moment(2);
    double cells = std::pow(static_cast<double>(r) - 1.0, static_cast<double>(d));
    return std::pow(static_cast<double>(n), 2.0 * d) * std::pow(p2, cells) +
           4.0 * std::pow(static_cast<double>(r), static_cast<double>(d)) *
               std::pow(static_cast<double>(n), static_cast<double>(d)) *
               std::pow(p2, cells / 2.0);
}

double expected_er_blocking(uint32_t N, uint32_t r, double p, bool conditioned) {
    if (r < 1) throw std::invalid_argument("expected_er_blocking: r >= 1");
    uint32_t k = 4 * r + 6;
    if (N < k || (conditioned && N < 2 * k)) return 0.0;
    if (p <= 0.0 || p >= 1.0) return 0.0;  // p = 1 forces absent edges to exist

    // vertex-assignment count: choose the bare line, its order (up to
    // reversal), likewise the pronged line, the prong vertices and their
    // split into the two ends
    double log_ways = log_binom(k, 2 * r + 1) + log_binom(2 * r + 5, 4) + log_binom(4, 2) +
                      std::log(2.0) + 2.0 * std::lgamma(2 * r + 2.0) - std::log(4.0);

    // conditioned: the per-set mean given a disjoint occurrence, which lives
    // on N - k effective vertices (no binomial factor)
    uint32_t base = conditioned ? N - k : N;
    double edges_present = 2.0 * (2.0 * r + 2.0);
    double edges_absent = static_cast<double>(k) * (static_cast<double>(base) - 3.0) + 4.0;
    double log_total = log_ways + edges_present * std::log(p) + edges_absent * std::log1p(-p);
    if (!conditioned) log_total += log_binom(N, k);
    return std::exp(log_total);
}

double er_second_moment_ratio(uint32_t N, uint32_t r, double p) {
    uint32_t k = 4 * r + 6;
    if (N < 2 * k || p <= 0.0 || p >= 1.0) return 0.0;
    double log_ways = log_binom(k, 2 * r + 1) + log_binom(2 * r + 5, 4) + log_binom(4, 2) +
                      std::log(2.0) + 2.0 * std::lgamma(2 * r + 2.0) - std::log(4.0);
    double edges_present = 2.0 * (2.0 * r + 2.0);
    auto log_mean = [&](uint32_t base, double choose) {
        double absent = static_cast<double>(k) * (static_cast<double>(base) - 3.0) + 4.0;
        return choose + log_ways + edges_present * std::log(p) + absent * std::log1p(-p);
    };
    double log_eb = log_mean(N, log_binom(N, k));
    double log_cond = log_mean(N - k, log_binom(N - k, k));
    // EB^2 = EB (1 + C(N-k, k) E[X|X]) => ratio = EB / (1 + exp(log_cond))
    if (log_cond > 700.0) return std::exp(log_eb - log_cond);
    return std::exp(log_eb) / (1.0 + std::exp(log_cond));
}

double expected_tree_blocking_bound(uint32_t levels, uint32_t q) {
    if (levels < 3) throw std::invalid_argument("expected_tree_blocking_bound: levels >= 3");
    double pairs = ipow(2.0, 2 * (levels - 2));
    return pairs * (1.0 / q) * (1.0 / q) * (1.0 - ipow(1.0 / q, 3));
}

double expected_tree_blocking_exact(uint32_t levels, uint32_t q) {
    if (levels < 3) throw std::invalid_argument("expected_tree_blocking_exact: levels >= 3");
    double m = ipow(2.0, levels - 2);  // one chosen child per level-(n-2) parent
    double pairs = m * (m - 1.0);
    double qd = q;
    double same_set = (2.0 * qd - 1.0) / (qd * qd * qd);
    return pairs * (1.0 / qd) * (1.0 / qd) * (1.0 - same_set);
}

}  // namespace shotgun
