#include "shotgun/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace shotgun {

uint64_t m_rec_upper(uint64_t N, double epsilon) {
    if (N < 1) throw std::invalid_argument("m_rec_upper: N >= 1");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("m_rec_upper: epsilon in (0,1)");
    double n = static_cast<double>(N);
    return static_cast<uint64_t>(std::ceil(n * std::log(n) - n * std::log(epsilon)));
}

namespace {

// the second-moment ratio at sample count M, with union sizes pre-bucketed
double coverage_ratio(const std::vector<std::pair<double, uint64_t>>& size_buckets,
                      const std::vector<std::pair<double, uint64_t>>& union_buckets,
                      uint64_t M) {
    double num = 0.0;
    for (auto [frac, cnt] : size_buckets)
        num += static_cast<double>(cnt) * std::pow(frac, static_cast<double>(M));
    num *= num;
    double den = 0.0;
    for (auto [frac, cnt] : union_buckets)
        den += static_cast<double>(cnt) * std::pow(frac, static_cast<double>(M));
    if (den <= 0.0) return 0.0;
    return num / den;
}

}  // namespace

uint64_t m_rec_lower_general(const std::vector<uint64_t>& sizes,
                             const std::function<uint64_t(size_t, size_t)>& pair_union_size,
                             uint64_t N, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("m_rec_lower_general: epsilon in (0,1)");
    if (sizes.empty()) throw std::invalid_argument("m_rec_lower_general: empty profile");
    for (uint64_t s : sizes)
        if (s >= N) return 0;  // one sample can see everything

    std::map<uint64_t, uint64_t> size_hist, union_hist;
    for (uint64_t s : sizes) ++size_hist[s];
    for (size_t i = 0; i < sizes.size(); ++i)
        for (size_t j = 0; j < sizes.size(); ++j) ++union_hist[pair_union_size(i, j)];

    std::vector<std::pair<double, uint64_t>> size_buckets, union_buckets;
    for (auto [s, c] : size_hist)
        size_buckets.push_back({1.0 - static_cast<double>(s) / static_cast<double>(N), c});
    for (auto [u, c] : union_hist) {
        double frac = 1.0 - static_cast<double>(u) / static_cast<double>(N);
        union_buckets.push_back({std::max(frac, 0.0), c});
    }

    auto ok = [&](uint64_t M) {
        return coverage_ratio(size_buckets, union_buckets, M) >= epsilon;
    };
    if (!ok(1)) return 0;
    uint64_t lo = 1, hi = 2;
    while (ok(hi)) {
        lo = hi;
        if (hi > (1ull << 62)) break;  // ratio never drops below epsilon
        hi *= 2;
    }
    // binary search the last good M; monotonicity is verified empirically in
    // the test suite, with a linear fallback if it ever breaks
    while (lo + 1 < hi) {
        uint64_t mid = lo + (hi - lo) / 2;
        if (ok(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

uint64_t m_rec_lower_general(const LabeledGraph& g, uint32_t radius, double epsilon) {
    const uint32_t n = g.num_vertices();
    std::vector<std::vector<VertexId>> balls(n);
    std::vector<uint64_t> sizes(n);
    for (VertexId v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v);
        for (VertexId w = 0; w < n; ++w)
            if (dist[w] != kUnreachable && static_cast<uint32_t>(dist[w]) <= radius)
                balls[v].push_back(w);
        sizes[v] = balls[v].size();
    }
    auto union_size = [&](size_t i, size_t j) -> uint64_t {
        if (i == j) return sizes[i];
        const auto& A = balls[i];
        const auto& B = balls[j];
        size_t inter = 0, a = 0, b = 0;
        while (a < A.size() && b < B.size()) {
            if (A[a] < B[b])
                ++a;
            else if (B[b] < A[a])
                ++b;
            else {
                ++inter;
                ++a;
                ++b;
            }
        }
        return sizes[i] + sizes[j] - inter;
    };
    return m_rec_lower_general(sizes, union_size, n, epsilon);
}

uint64_t m_rec_lower_lattice(uint64_t N, uint32_t r, uint32_t d, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("m_rec_lower_lattice: epsilon in (0,1)");
    double rd = std::pow(static_cast<double>(r), static_cast<double>(d));
    double box = std::pow(2.0 * r - 1.0, static_cast<double>(d));
    double n = static_cast<double>(N);
    if (!(rd < n)) throw std::invalid_argument("m_rec_lower_lattice: need r^d < N");
    double numerator = std::log(1.0 / epsilon - 1.0) - std::log(box / n);
    double denominator = -std::log(1.0 - rd / n);
    if (!(denominator > 0.0))
        throw std::invalid_argument("m_rec_lower_lattice: degenerate denominator");
    double value = numerator / denominator;
    if (value <= 0.0) return 0;
    return static_cast<uint64_t>(std::floor(value));
}

std::vector<double> simulate_sampling_grid(uint64_t N, const std::vector<uint64_t>& m_grid,
                                           uint32_t trials, Seed seed) {
    if (N < 1) throw std::invalid_argument("simulate_sampling_grid: N >= 1");
    std::vector<uint64_t> grid = m_grid;
    std::sort(grid.begin(), grid.end());
    std::vector<uint64_t> successes(grid.size(), 0);
    for (uint32_t t = 0; t < trials; ++t) {
        Rng rng(Seed{seed.master, seed.stream + t});
        std::vector<bool> seen(N, false);
        uint64_t covered = 0, draws = 0;
        // shared draw stream: success at M implies success at every M' > M
        size_t gi = 0;
        for (; gi < grid.size(); ++gi) {
            while (draws < grid[gi] && covered < N) {
                uint64_t v = rng.next_below(N);
                ++draws;
                if (!seen[v]) {
                    seen[v] = true;
                    ++covered;
                }
            }
            if (covered == N) break;
        }
        for (size_t k = gi; k < grid.size(); ++k) ++successes[k];
    }
    std::vector<double> out(grid.size());
    for (size_t k = 0; k < grid.size(); ++k)
        out[k] = static_cast<double>(successes[k]) / static_cast<double>(trials);
    // map back to the caller's order
    std::vector<double> mapped(m_grid.size());
    for (size_t k = 0; k < m_grid.size(); ++k) {
        size_t pos = std::lower_bound(grid.begin(), grid.end(), m_grid[k]) - grid.begin();
        mapped[k] = out[pos];
    }
    return mapped;
}

double simulate_sampling(uint64_t N, uint64_t M, uint32_t trials, Seed seed) {
    return simulate_sampling_grid(N, {M}, trials, seed)[0];
}

}  // namespace shotgun
