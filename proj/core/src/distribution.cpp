#include "shotgun/distribution.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace shotgun {

LabelDistribution::LabelDistribution(std::vector<double> probabilities)
    : probs_(std::move(probabilities)) {
    if (probs_.empty()) throw std::invalid_argument("LabelDistribution: empty alphabet");
    double sum = 0.0;
    for (double p : probs_) {
        if (p < 0.0 || !std::isfinite(p))
            throw std::invalid_argument("LabelDistribution: negative or non-finite weight");
        sum += p;
    }
    if (sum <= 0.0) throw std::invalid_argument("LabelDistribution: zero total mass");
    if (std::abs(sum - 1.0) > kTolerance) {
        for (double& p : probs_) p /= sum;
        normalized_ = true;
    }
    cumulative_.resize(probs_.size());
    double acc = 0.0;
    for (size_t i = 0; i < probs_.size(); ++i) {
        acc += probs_[i];
        cumulative_[i] = acc;
    }
    cumulative_.back() = 1.0;
}

LabelDistribution LabelDistribution::uniform(uint32_t q) {
    if (q == 0) throw std::invalid_argument("LabelDistribution: q must be >= 1");
    return LabelDistribution(std::vector<double>(q, 1.0 / q));
}

LabelDistribution LabelDistribution::point_mass(uint32_t q, uint32_t label) {
    if (label >= q) throw std::invalid_argument("LabelDistribution: label out of range");
    std::vector<double> p(q, 0.0);
    p[label] = 1.0;
    return LabelDistribution(std::move(p));
}

bool LabelDistribution::is_uniform() const {
    double expect = 1.0 / static_cast<double>(probs_.size());
    for (double p : probs_)
        if (std::abs(p - expect) > 1e-9) return false;
    return true;
}

double LabelDistribution::moment(uint32_t j) const {
    double acc = 0.0;
    for (double p : probs_) acc += std::pow(p, static_cast<double>(j));
    return acc;
}

uint32_t LabelDistribution::sample(Rng& rng) const {
    double u = rng.next_double();
    // binary search over the cumulative table
    size_t lo = 0, hi = cumulative_.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (cumulative_[mid] <= u)
            lo = mid + 1;
        else
            hi = mid;
    }
    return static_cast<uint32_t>(lo);
}

}  // namespace shotgun
