#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shotgun/graph.hpp"

namespace shotgun {

// Induced labeled subgraph of radius `radius` around `center` (a local id).
// `local_to_global` is present only for neighborhoods extracted from a host
// graph; adversarial inputs may omit it.
struct RootedNeighborhood {
    LabeledGraph graph;
    VertexId center = 0;
    uint32_t radius = 0;
    std::optional<std::vector<VertexId>> local_to_global;
};

// Axis-aligned box of side `side` anchored at `anchor`, labels in row-major
// order. Boxes are compared as oriented arrays (no symmetry quotient).
struct LatticeBox {
    std::vector<uint32_t> anchor;
    uint32_t side = 0;
    std::vector<Label> labels;

    bool operator==(const LatticeBox& other) const {
        return side == other.side && labels == other.labels;
    }
};

RootedNeighborhood extract_neighborhood(const LabeledGraph& g, VertexId v, uint32_t radius);

LatticeBox extract_box(const LabeledGraph& g, const std::vector<uint32_t>& anchor, uint32_t side);

// Subgraph induced by the edges whose endpoints both lie at distance in [s, t]
// from v. Isolated vertices are dropped: `to_host` lists only edge endpoints.
// `dist_to_center` gives each kept vertex's distance to v in the host graph.
struct SphereShell {
    LabeledGraph graph;
    std::vector<VertexId> to_host;
    std::vector<uint32_t> dist_to_center;
};
SphereShell sphere(const LabeledGraph& g, VertexId v, uint32_t s, uint32_t t);

}  // namespace shotgun
