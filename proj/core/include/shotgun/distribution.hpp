#pragma once

#include <cstdint>
#include <vector>

#include "shotgun/rng.hpp"

namespace shotgun {

// Probability distribution over a finite label alphabet {0, ..., q-1}.
class LabelDistribution {
public:
    // Normalizes the weights on construction; inputs farther than `kTolerance`
    // from summing to 1 are rescaled and `was_normalized()` reports it.
    explicit LabelDistribution(std::vector<double> probabilities);

    static LabelDistribution uniform(uint32_t q);
    static LabelDistribution point_mass(uint32_t q, uint32_t label);

    uint32_t alphabet_size() const { return static_cast<uint32_t>(probs_.size()); }
    const std::vector<double>& probabilities() const { return probs_; }
    bool was_normalized() const { return normalized_; }
    bool is_uniform() const;

    // moment(j) = sum_i p_i^j: the probability that j given sites share a label.
    double moment(uint32_t j) const;

    uint32_t sample(Rng& rng) const;

    static constexpr double kTolerance = 1e-12;

private:
    std::vector<double> probs_;
    std::vector<double> cumulative_;
    bool normalized_ = false;
};

}  // namespace shotgun
