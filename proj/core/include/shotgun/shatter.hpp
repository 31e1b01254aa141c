#pragma once

#include <cstdint>
#include <vector>

#include "shotgun/canonical.hpp"
#include "shotgun/graph.hpp"
#include "shotgun/neighborhood.hpp"

namespace shotgun {

enum class ShatterMode {
    Rooted,    // one radius-r rooted neighborhood per vertex
    LatticeBox // one side-r box per anchor; requires lattice geometry
};

// The atomic observation set handed to reconstruction and identifiability
// checks. Exactly one of `rooted` / `boxes` is populated, per `mode`.
struct NeighborhoodMultiset {
    ShatterMode mode = ShatterMode::Rooted;
    uint32_t radius = 0;  // rooted radius, or box side in lattice mode
    std::vector<RootedNeighborhood> rooted;
    std::vector<LatticeBox> boxes;

    size_t size() const {
        return mode == ShatterMode::Rooted ? rooted.size() : boxes.size();
    }
};

NeighborhoodMultiset shatter(const LabeledGraph& g, uint32_t radius,
                             ShatterMode mode = ShatterMode::Rooted);

// True iff all entries are pairwise distinct: canonical codes in rooted mode,
// raw label arrays in box mode. A box side of zero is treated as never unique
// (all empty boxes collide) once there are at least two of them.
bool check_overlap_uniqueness(const NeighborhoodMultiset& ms, const CanonicalOptions& opts = {});

// Equivalent to check_overlap_uniqueness(shatter(g, radius)) but avoids
// materializing saturated neighborhoods: vertices whose ball is the whole
// graph are compared through the automorphism structure of g itself, which
// keeps the dense regime (balls = entire graph) tractable.
bool distinct_rooted_neighborhoods(const LabeledGraph& g, uint32_t radius,
                                   const CanonicalOptions& opts = {});

// Sorted canonical-code multiset of the radius-r shatter; the comparison key
// for "same neighborhoods" between two graphs.
std::vector<CanonicalCode> shatter_code_multiset(const LabeledGraph& g, uint32_t radius,
                                                 const CanonicalOptions& opts = {});

// Box-mode analogue: sorted label arrays of all side-`side` boxes.
std::vector<std::vector<Label>> box_label_multiset(const LabeledGraph& g, uint32_t side);

}  // namespace shotgun
