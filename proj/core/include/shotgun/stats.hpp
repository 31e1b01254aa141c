#pragma once

#include <cmath>
#include <cstdint>

namespace shotgun {

// Streaming mean/variance (Welford).
class RunningStats {
public:
    void add(double x) {
        ++n_;
        double d = x - mean_;
        mean_ += d / static_cast<double>(n_);
        m2_ += d * (x - mean_);
    }
    uint64_t count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
    double stddev() const { return std::sqrt(variance()); }
    double standard_error() const {
        return n_ > 0 ? stddev() / std::sqrt(static_cast<double>(n_)) : 0.0;
    }

private:
    uint64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Wilson score interval for a binomial proportion; behaves sensibly at p near
// 0 or 1 where the normal approximation does not.
inline Interval wilson_interval(uint64_t successes, uint64_t trials, double z = 1.959963984540054) {
    if (trials == 0) return {0.0, 1.0};
    double n = static_cast<double>(trials);
    double p = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {center - half, center + half};
}

// z-score of an empirical mean against an analytic expectation. When the
// empirical variance degenerates (all-zero counts of a rare event) fall back
// to the Poisson-style floor var ~= |expected| so the score stays defined.
inline double z_score(double empirical_mean, double empirical_var, uint64_t trials,
                      double expected) {
    if (trials == 0) return 0.0;
    double var = empirical_var;
    double floor_var = std::abs(expected);
    if (var < floor_var * 1e-12 || var == 0.0) var = floor_var;
    if (var == 0.0) return 0.0;
    double se = std::sqrt(var / static_cast<double>(trials));
    if (se == 0.0) return 0.0;
    return (empirical_mean - expected) / se;
}

}  // namespace shotgun
