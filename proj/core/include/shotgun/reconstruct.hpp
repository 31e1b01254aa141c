#pragma once

#include <cstdint>
#include <string>

#include "shotgun/shatter.hpp"

namespace shotgun {

enum class ReconstructStatus {
    Success,
    AmbiguousOverlap,  // two distinct gluings matched one frontier vertex
    Inconsistent,      // codes matched but the glued subgraphs conflict
};

struct ReconstructOptions {
    CanonicalOptions canonical;
    // Re-shatter the output and compare code multisets with the input before
    // declaring success. Quadratic-ish; meant for tests and spot checks.
    bool verify_output = false;
};

struct ReconstructResult {
    ReconstructStatus status = ReconstructStatus::Success;
    LabeledGraph graph;
    std::string detail;
};

// Rebuilds a graph from rooted radius-r neighborhoods by identifying vertices
// through their (r-1)-neighborhood codes and gluing overlaps outward from a
// seed, component by component. Exact when all (r-1)-codes within a component
// are distinct; collisions surface as AmbiguousOverlap, adversarial input as
// Inconsistent. Frontier vertices are processed in ascending code order, so
// the output is deterministic for a fixed input multiset.
ReconstructResult reconstruct(const NeighborhoodMultiset& ms,
                              const ReconstructOptions& opts = {});

}  // namespace shotgun
