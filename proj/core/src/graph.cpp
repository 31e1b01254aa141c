#include "shotgun/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace shotgun {

VertexId LatticeGeometry::index_of(const std::vector<uint32_t>& coord) const {
    if (coord.size() != dim) throw std::invalid_argument("lattice coord: wrong dimension");
    uint64_t idx = 0;
    for (uint32_t a = 0; a < dim; ++a) {
        if (coord[a] >= side) throw std::invalid_argument("lattice coord: out of bounds");
        idx = idx * side + coord[a];
    }
    return static_cast<VertexId>(idx);
}

std::vector<uint32_t> LatticeGeometry::coord_of(VertexId v) const {
    std::vector<uint32_t> c(dim);
    uint64_t x = v;
    for (uint32_t a = dim; a-- > 0;) {
        c[a] = static_cast<uint32_t>(x % side);
        x /= side;
    }
    return c;
}

LabeledGraph::LabeledGraph(uint32_t num_vertices, uint32_t alphabet_size)
    : adj_(num_vertices), labels_(num_vertices, 0), alphabet_size_(alphabet_size) {
    if (alphabet_size == 0) throw std::invalid_argument("alphabet size must be >= 1");
}

void LabeledGraph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (u >= num_vertices() || v >= num_vertices())
        throw std::invalid_argument("add_edge: vertex id out of range");
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) throw std::invalid_argument("duplicate edge");
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++num_edges_;
}

bool LabeledGraph::has_edge(VertexId u, VertexId v) const {
    if (u >= num_vertices() || v >= num_vertices()) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    VertexId t = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), t);
}

std::vector<std::pair<VertexId, VertexId>> LabeledGraph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(num_edges_);
    for (VertexId u = 0; u < num_vertices(); ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void LabeledGraph::validate() const {
    for (VertexId v = 0; v < num_vertices(); ++v)
        if (labels_[v] >= alphabet_size_)
            throw std::invalid_argument("label out of alphabet range");
    if (geometry_) {
        if (geometry_->num_sites() != num_vertices())
            throw std::invalid_argument("geometry does not match vertex count");
        // every lattice edge must be a nearest-neighbor step
        for (VertexId u = 0; u < num_vertices(); ++u) {
            auto cu = geometry_->coord_of(u);
            for (VertexId v : adj_[u]) {
                auto cv = geometry_->coord_of(v);
                uint32_t diff = 0;
                for (uint32_t a = 0; a < geometry_->dim; ++a) {
                    uint32_t d = cu[a] > cv[a] ? cu[a] - cv[a] : cv[a] - cu[a];
                    diff += d;
                }
                if (diff != 1)
                    throw std::invalid_argument("geometry: edge is not nearest-neighbor");
            }
        }
    }
}

std::vector<int32_t> bfs_distances(const LabeledGraph& g, VertexId v) {
    if (v >= g.num_vertices()) throw std::invalid_argument("bfs_distances: invalid vertex");
    std::vector<int32_t> dist(g.num_vertices(), kUnreachable);
    std::deque<VertexId> queue{v};
    dist[v] = 0;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<VertexId>> connected_components(const LabeledGraph& g) {
    std::vector<std::vector<VertexId>> comps;
    std::vector<bool> seen(g.num_vertices(), false);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (seen[s]) continue;
        std::vector<VertexId> comp;
        std::deque<VertexId> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (VertexId w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

InducedSubgraph induced_subgraph(const LabeledGraph& g, const std::vector<VertexId>& vertices) {
    std::vector<VertexId> to_host = vertices;
    std::sort(to_host.begin(), to_host.end());
    to_host.erase(std::unique(to_host.begin(), to_host.end()), to_host.end());

    LabeledGraph sub(static_cast<uint32_t>(to_host.size()), g.alphabet_size());
    for (uint32_t i = 0; i < to_host.size(); ++i) sub.set_label(i, g.label(to_host[i]));

    auto local_of = [&](VertexId host) -> int64_t {
        auto it = std::lower_bound(to_host.begin(), to_host.end(), host);
        if (it == to_host.end() || *it != host) return -1;
        return it - to_host.begin();
    };
    for (uint32_t i = 0; i < to_host.size(); ++i) {
        for (VertexId w : g.neighbors(to_host[i])) {
            int64_t j = local_of(w);
            if (j >= 0 && static_cast<uint32_t>(j) > i)
                sub.add_edge(i, static_cast<VertexId>(j));
        }
    }
    return {std::move(sub), std::move(to_host)};
}

LabeledGraph permute_vertices(const LabeledGraph& g, const std::vector<VertexId>& perm) {
    if (perm.size() != g.num_vertices())
        throw std::invalid_argument("permute_vertices: size mismatch");
    LabeledGraph out(g.num_vertices(), g.alphabet_size());
    for (VertexId v = 0; v < g.num_vertices(); ++v) out.set_label(perm[v], g.label(v));
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace shotgun
