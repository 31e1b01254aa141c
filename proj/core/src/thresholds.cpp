#include "shotgun/thresholds.hpp"

#include <cmath>
#include <stdexcept>

#include "shotgun/canonical.hpp"

namespace shotgun {

double solve_lambda_star(double lambda) {
    if (!(lambda > 1.0)) throw std::invalid_argument("solve_lambda_star: require lambda > 1");
    const double target = lambda * std::exp(-lambda);
    double lo = 0.0, hi = 1.0;
    // x e^-x is strictly increasing on (0,1)
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        double val = mid * std::exp(-mid);
        if (std::abs(val - target) <= 1e-13) return mid;
        if (val < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

LatticePrediction predict_lattice_threshold(uint32_t n, uint32_t d, uint32_t q) {
    if (n < 2 || d < 1 || q < 2)
        throw std::invalid_argument("predict_lattice_threshold: bad parameters");
    double ratio = std::log(static_cast<double>(n)) / std::log(static_cast<double>(q));
    double dd = d;
    double low_rd = (dd / std::pow(2.0, dd - 1.0)) * ratio;   // r^d at the blocking boundary
    double high_rd = 2.0 * dd * ratio;                        // r^d at the uniqueness boundary
    LatticePrediction out;
    out.r_low = static_cast<uint32_t>(std::floor(std::pow(low_rd, 1.0 / dd)));
    out.r_high = static_cast<uint32_t>(std::ceil(std::pow(high_rd, 1.0 / dd)));
    if (out.r_low < 1) out.r_low = 1;
    if (out.r_high < out.r_low) out.r_high = out.r_low;
    return out;
}

ErPrediction predict_er_threshold(uint32_t N, double lambda) {
    if (N < 2 || lambda <= 0.0) throw std::invalid_argument("predict_er_threshold: bad parameters");
    double logN = std::log(static_cast<double>(N));
    ErPrediction out;
    out.r_low = static_cast<uint32_t>(std::floor(logN / (2.0 * (lambda - std::log(lambda)))));
    if (lambda == 1.0) {
        out.critical = true;  // sufficiency side open at the critical point
        return out;
    }
    double high;
    if (lambda < 1.0) {
        high = logN / std::log(1.0 / lambda);
    } else {
        double ls = solve_lambda_star(lambda);
        high = logN * (1.0 / std::log(lambda) + 2.0 / std::log(1.0 / ls));
    }
    out.r_high = static_cast<uint32_t>(std::ceil(high));
    return out;
}

JigsawPrediction predict_jigsaw_threshold(uint32_t n) {
    if (n < 2) throw std::invalid_argument("predict_jigsaw_threshold: n >= 2");
    JigsawPrediction out;
    out.q_block = static_cast<uint32_t>(std::floor(std::pow(static_cast<double>(n), 2.0 / 3.0)));
    out.q_assemble = static_cast<uint64_t>(n) * n;
    return out;
}

uint32_t max_component_diameter(const LabeledGraph& g, uint64_t max_bfs) {
    if (g.num_vertices() > max_bfs)
        throw BudgetExceeded("max_component_diameter: BFS budget exceeded");
    uint32_t best = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int32_t d : dist)
            if (d != kUnreachable && static_cast<uint32_t>(d) > best)
                best = static_cast<uint32_t>(d);
    }
    return best;
}

}  // namespace shotgun
