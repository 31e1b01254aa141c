#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shotgun {

using VertexId = uint32_t;
using Label = uint16_t;

inline constexpr int32_t kUnreachable = -1;

// Axis-aligned box metadata for lattice-structured graphs. Coordinates are
// row-major with the last axis fastest: index = ((c0*n + c1)*n + c2)...
struct LatticeGeometry {
    uint32_t side = 0;   // n
    uint32_t dim = 0;    // d

    uint64_t num_sites() const {
        uint64_t v = 1;
        for (uint32_t i = 0; i < dim; ++i) v *= side;
        return v;
    }
    VertexId index_of(const std::vector<uint32_t>& coord) const;
    std::vector<uint32_t> coord_of(VertexId v) const;
};

// Simple undirected labeled graph. Adjacency lists are kept sorted; the type
// is treated as immutable once built, so it is safe to share across threads.
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(uint32_t num_vertices, uint32_t alphabet_size);

    uint32_t num_vertices() const { return static_cast<uint32_t>(adj_.size()); }
    uint64_t num_edges() const { return num_edges_; }
    uint32_t alphabet_size() const { return alphabet_size_; }

    Label label(VertexId v) const { return labels_[v]; }
    void set_label(VertexId v, Label l) { labels_[v] = l; }
    const std::vector<Label>& labels() const { return labels_; }

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    uint32_t degree(VertexId v) const { return static_cast<uint32_t>(adj_[v].size()); }

    // Inserts an undirected edge; rejects self-loops and duplicates.
    void add_edge(VertexId u, VertexId v);
    bool has_edge(VertexId u, VertexId v) const;
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    const std::optional<LatticeGeometry>& geometry() const { return geometry_; }
    void set_geometry(LatticeGeometry g) { geometry_ = g; }

    // Throws std::invalid_argument when a structural invariant is broken
    // (label out of alphabet, geometry/vertex-count mismatch).
    void validate() const;

private:
    std::vector<std::vector<VertexId>> adj_;
    std::vector<Label> labels_;
    uint64_t num_edges_ = 0;
    uint32_t alphabet_size_ = 1;
    std::optional<LatticeGeometry> geometry_;
};

// Exact hop distances from v; kUnreachable marks separate components.
std::vector<int32_t> bfs_distances(const LabeledGraph& g, VertexId v);

// Connected components as vertex lists, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const LabeledGraph& g);

// Induced subgraph on `vertices` (need not be sorted); keeps labels, drops
// geometry. Returns the subgraph plus the local->host vertex map.
struct InducedSubgraph {
    LabeledGraph graph;
    std::vector<VertexId> to_host;
};
InducedSubgraph induced_subgraph(const LabeledGraph& g, const std::vector<VertexId>& vertices);

// Applies a vertex relabeling: vertex v of the input becomes perm[v].
LabeledGraph permute_vertices(const LabeledGraph& g, const std::vector<VertexId>& perm);

}  // namespace shotgun
