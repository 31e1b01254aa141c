#include "shotgun/shatter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace shotgun {

namespace {

// all anchors of side-`side` boxes, row-major order
std::vector<std::vector<uint32_t>> box_anchors(const LatticeGeometry& geo, uint32_t side) {
    std::vector<std::vector<uint32_t>> anchors;
    if (side > geo.side) return anchors;
    uint32_t range = geo.side - side + 1;
    std::vector<uint32_t> a(geo.dim, 0);
    for (;;) {
        anchors.push_back(a);
        uint32_t axis = geo.dim;
        bool done = true;
        while (axis-- > 0) {
            if (++a[axis] < range) {
                done = false;
                break;
            }
            a[axis] = 0;
            if (axis == 0) break;
        }
        if (done) break;
    }
    return anchors;
}

std::vector<VertexId> ball_vertices(const LabeledGraph& g, VertexId v, uint32_t radius) {
    std::vector<VertexId> ball;
    std::vector<int32_t> dist(g.num_vertices(), kUnreachable);
    std::deque<VertexId> queue{v};
    dist[v] = 0;
    ball.push_back(v);
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        if (static_cast<uint32_t>(dist[u]) == radius) continue;
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                ball.push_back(w);
                queue.push_back(w);
            }
        }
    }
    std::sort(ball.begin(), ball.end());
    return ball;
}

}  // namespace

NeighborhoodMultiset shatter(const LabeledGraph& g, uint32_t radius, ShatterMode mode) {
    NeighborhoodMultiset ms;
    ms.mode = mode;
    ms.radius = radius;
    if (mode == ShatterMode::Rooted) {
        ms.rooted.reserve(g.num_vertices());
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            ms.rooted.push_back(extract_neighborhood(g, v, radius));
    } else {
        if (!g.geometry())
            throw std::invalid_argument("shatter: lattice box mode requires geometry");
        for (const auto& a : box_anchors(*g.geometry(), radius))
            ms.boxes.push_back(extract_box(g, a, radius));
    }
    return ms;
}

bool check_overlap_uniqueness(const NeighborhoodMultiset& ms, const CanonicalOptions& opts) {
    if (ms.size() == 0) throw std::invalid_argument("check_overlap_uniqueness: empty multiset");
    if (ms.mode == ShatterMode::LatticeBox) {
        if (ms.radius == 0) return ms.boxes.size() <= 1;
        std::vector<std::vector<Label>> arrays;
        arrays.reserve(ms.boxes.size());
        for (const auto& b : ms.boxes) arrays.push_back(b.labels);
        std::sort(arrays.begin(), arrays.end());
        return std::adjacent_find(arrays.begin(), arrays.end()) == arrays.end();
    }
    std::vector<CanonicalCode> codes;
    codes.reserve(ms.rooted.size());
    for (const auto& nb : ms.rooted) codes.push_back(canonical_code(nb, opts));
    std::sort(codes.begin(), codes.end());
    return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

bool distinct_rooted_neighborhoods(const LabeledGraph& g, uint32_t radius,
                                   const CanonicalOptions& opts) {
    const uint32_t n = g.num_vertices();
    if (n <= 1) return true;

    std::vector<std::vector<VertexId>> balls(n);
    std::vector<VertexId> saturated;
    std::vector<VertexId> partial;
    for (VertexId v = 0; v < n; ++v) {
        balls[v] = ball_vertices(g, v, radius);
        if (balls[v].size() == n)
            saturated.push_back(v);
        else
            partial.push_back(v);
    }

    // Saturated balls are g itself rooted at v; codes collide iff an
    // automorphism of g maps one root to the other. Roots in different stable
    // classes are in different orbits, so only same-class pairs need codes.
    if (!saturated.empty()) {
        auto colors = stable_coloring(g);
        std::map<uint32_t, std::vector<VertexId>> classes;
        for (VertexId v : saturated) classes[colors[v]].push_back(v);
        for (auto& [c, members] : classes) {
            if (members.size() < 2) continue;
            std::vector<CanonicalCode> codes;
            codes.reserve(members.size());
            for (VertexId v : members) codes.push_back(canonical_code_rooted(g, v, opts));
            std::sort(codes.begin(), codes.end());
            if (std::adjacent_find(codes.begin(), codes.end()) != codes.end()) return false;
        }
    }

    // Partial balls: group by ball size (an isomorphism invariant; saturated
    // balls have size n so the groups never cross), then compare codes.
    std::map<size_t, std::vector<VertexId>> by_size;
    for (VertexId v : partial) by_size[balls[v].size()].push_back(v);
    for (auto& [size, members] : by_size) {
        if (members.size() < 2) continue;
        std::vector<CanonicalCode> codes;
        codes.reserve(members.size());
        for (VertexId v : members)
            codes.push_back(canonical_code(extract_neighborhood(g, v, radius), opts));
        std::sort(codes.begin(), codes.end());
        if (std::adjacent_find(codes.begin(), codes.end()) != codes.end()) return false;
    }
    return true;
}

std::vector<CanonicalCode> shatter_code_multiset(const LabeledGraph& g, uint32_t radius,
                                                 const CanonicalOptions& opts) {
    std::vector<CanonicalCode> codes;
    codes.reserve(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        codes.push_back(canonical_code(extract_neighborhood(g, v, radius), opts));
    std::sort(codes.begin(), codes.end());
    return codes;
}

std::vector<std::vector<Label>> box_label_multiset(const LabeledGraph& g, uint32_t side) {
    if (!g.geometry())
        throw std::invalid_argument("box_label_multiset: requires lattice geometry");
    std::vector<std::vector<Label>> arrays;
    for (const auto& a : box_anchors(*g.geometry(), side))
        arrays.push_back(extract_box(g, a, side).labels);
    std::sort(arrays.begin(), arrays.end());
    return arrays;
}

}  // namespace shotgun
