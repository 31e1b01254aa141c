#include "shotgun/neighborhood.hpp"

#include <algorithm>
#include <stdexcept>

namespace shotgun {

RootedNeighborhood extract_neighborhood(const LabeledGraph& g, VertexId v, uint32_t radius) {
    if (v >= g.num_vertices())
        throw std::invalid_argument("extract_neighborhood: invalid vertex");
    auto dist = bfs_distances(g, v);
    std::vector<VertexId> ball;
    for (VertexId w = 0; w < g.num_vertices(); ++w)
        if (dist[w] != kUnreachable && static_cast<uint32_t>(dist[w]) <= radius)
            ball.push_back(w);
    auto sub = induced_subgraph(g, ball);
    auto it = std::lower_bound(sub.to_host.begin(), sub.to_host.end(), v);
    RootedNeighborhood nb;
    nb.center = static_cast<VertexId>(it - sub.to_host.begin());
    nb.graph = std::move(sub.graph);
    nb.radius = radius;
    nb.local_to_global = std::move(sub.to_host);
    return nb;
}

LatticeBox extract_box(const LabeledGraph& g, const std::vector<uint32_t>& anchor, uint32_t side) {
    if (!g.geometry()) throw std::invalid_argument("extract_box: graph has no lattice geometry");
    const auto& geo = *g.geometry();
    if (anchor.size() != geo.dim) throw std::invalid_argument("extract_box: anchor dimension");
    if (side == 0) throw std::invalid_argument("extract_box: side must be >= 1");
    for (uint32_t a = 0; a < geo.dim; ++a)
        if (anchor[a] + side > geo.side) throw std::invalid_argument("extract_box: out of bounds");

    LatticeBox box;
    box.anchor = anchor;
    box.side = side;
    uint64_t cells = 1;
    for (uint32_t a = 0; a < geo.dim; ++a) cells *= side;
    box.labels.reserve(cells);

    std::vector<uint32_t> offset(geo.dim, 0);
    std::vector<uint32_t> coord(geo.dim);
    for (;;) {
        for (uint32_t a = 0; a < geo.dim; ++a) coord[a] = anchor[a] + offset[a];
        box.labels.push_back(g.label(geo.index_of(coord)));
        // row-major increment, last axis fastest
        uint32_t a = geo.dim;
        while (a-- > 0) {
            if (++offset[a] < side) break;
            offset[a] = 0;
            if (a == 0) return box;
        }
    }
}

SphereShell sphere(const LabeledGraph& g, VertexId v, uint32_t s, uint32_t t) {
    if (s == 0 || s > t) throw std::invalid_argument("sphere: require 0 < s <= t");
    if (v >= g.num_vertices()) throw std::invalid_argument("sphere: invalid vertex");
    auto dist = bfs_distances(g, v);
    auto in_shell = [&](VertexId w) {
        return dist[w] != kUnreachable && static_cast<uint32_t>(dist[w]) >= s &&
               static_cast<uint32_t>(dist[w]) <= t;
    };
    // keep only endpoints of qualifying edges
    std::vector<VertexId> kept;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        if (!in_shell(u)) continue;
        for (VertexId w : g.neighbors(u)) {
            if (in_shell(w)) {
                kept.push_back(u);
                break;
            }
        }
    }
    auto sub = induced_subgraph(g, kept);
    SphereShell shell;
    shell.dist_to_center.reserve(sub.to_host.size());
    for (VertexId h : sub.to_host) shell.dist_to_center.push_back(static_cast<uint32_t>(dist[h]));
    shell.graph = std::move(sub.graph);
    shell.to_host = std::move(sub.to_host);
    return shell;
}

}  // namespace shotgun
