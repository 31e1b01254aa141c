#include "shotgun/blocking.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "shotgun/expectations.hpp"
#include "shotgun/thresholds.hpp"

namespace shotgun {

namespace {

uint64_t upow(uint64_t base, uint32_t e) {
    uint64_t acc = 1;
    for (uint32_t i = 0; i < e; ++i) acc *= base;
    return acc;
}

// ---------------------------------------------------------------------------
// lattice helpers

std::vector<std::vector<uint32_t>> blocking_anchors(const LatticeGeometry& geo, uint32_t r) {
    // anchors with all coordinates 0 modulo (2r-1); boxes never overlap
    std::vector<std::vector<uint32_t>> anchors;
    uint32_t side = 2 * r - 1;
    if (side > geo.side) return anchors;
    uint32_t per_axis = (geo.side - side) / side + 1;
    std::vector<uint32_t> a(geo.dim, 0);
    for (;;) {
        std::vector<uint32_t> coord(geo.dim);
        for (uint32_t i = 0; i < geo.dim; ++i) coord[i] = a[i] * side;
        anchors.push_back(coord);
        uint32_t axis = geo.dim;
        bool done = true;
        while (axis-- > 0) {
            if (++a[axis] < per_axis) {
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

VertexId box_center_vertex(const LatticeGeometry& geo, const std::vector<uint32_t>& anchor,
                           uint32_t r) {
    std::vector<uint32_t> c(geo.dim);
    for (uint32_t i = 0; i < geo.dim; ++i) c[i] = anchor[i] + (r - 1);
    return geo.index_of(c);
}

// box labels with the center replaced by a sentinel, for grouping
struct AnchoredBox {
    VertexId center;
    Label center_label;
    std::vector<Label> rest;  // labels with center masked out
};

std::vector<AnchoredBox> anchored_blocking_boxes(const LabeledGraph& g, uint32_t r) {
    const auto& geo = *g.geometry();
    uint32_t side = 2 * r - 1;
    std::vector<AnchoredBox> out;
    for (const auto& anchor : blocking_anchors(geo, r)) {
        AnchoredBox b;
        b.center = box_center_vertex(geo, anchor, r);
        b.center_label = g.label(b.center);
        // row-major walk of the box
        std::vector<uint32_t> off(geo.dim, 0);
        std::vector<uint32_t> coord(geo.dim);
        for (;;) {
            for (uint32_t i = 0; i < geo.dim; ++i) coord[i] = anchor[i] + off[i];
            VertexId v = geo.index_of(coord);
            if (v != b.center) b.rest.push_back(g.label(v));
            uint32_t axis = geo.dim;
            bool done = true;
            while (axis-- > 0) {
                if (++off[axis] < side) {
                    done = false;
                    break;
                }
                off[axis] = 0;
                if (axis == 0) break;
            }
            if (done) break;
        }
        out.push_back(std::move(b));
    }
    return out;
}

// ---------------------------------------------------------------------------
// ER component classification

struct ComponentShape {
    bool is_bare_line = false;
    bool is_pronged_line = false;
    std::vector<VertexId> path;    // path order (line part for pronged)
    std::vector<VertexId> prongs;  // prongs of path.front() then path.back()
};

std::vector<VertexId> walk_path(const LabeledGraph& g, VertexId from,
                                const std::set<VertexId>& skip) {
    std::vector<VertexId> path{from};
    VertexId prev = UINT32_MAX;
    for (;;) {
        VertexId cur = path.back();
        VertexId next = UINT32_MAX;
        for (VertexId u : g.neighbors(cur)) {
            if (u == prev || skip.count(u)) continue;
            next = u;
            break;
        }
        if (next == UINT32_MAX) break;
        prev = cur;
        path.push_back(next);
    }
    return path;
}

ComponentShape classify_component(const LabeledGraph& g, const std::vector<VertexId>& comp,
                                  uint32_t r) {
    ComponentShape shape;
    const size_t k_line = 2 * r + 1;
    const size_t k_prong = 2 * r + 5;
    uint64_t degsum = 0;
    for (VertexId v : comp) degsum += g.degree(v);
    bool is_tree = degsum == 2 * (comp.size() - 1);
    if (!is_tree) return shape;

    if (comp.size() == k_line) {
        std::vector<VertexId> ends;
        for (VertexId v : comp) {
            uint32_t d = g.degree(v);
            if (d > 2) return shape;
            if (d == 1) ends.push_back(v);
        }
        if (ends.size() != 2) return shape;
        shape.path = walk_path(g, std::min(ends[0], ends[1]), {});
        if (shape.path.size() != k_line) return shape;
        shape.is_bare_line = true;
        return shape;
    }

    if (comp.size() == k_prong) {
        std::vector<VertexId> deg3, deg1;
        for (VertexId v : comp) {
            uint32_t d = g.degree(v);
            if (d > 3) return shape;
            if (d == 3) deg3.push_back(v);
            if (d == 1) deg1.push_back(v);
        }
        if (deg3.size() != 2 || deg1.size() != 4) return shape;
        std::set<VertexId> prong_set;
        for (VertexId x : deg3) {
            std::vector<VertexId> leaves;
            for (VertexId u : g.neighbors(x))
                if (g.degree(u) == 1) leaves.push_back(u);
            if (leaves.size() != 2) return shape;
            for (VertexId l : leaves) prong_set.insert(l);
        }
        if (prong_set.size() != 4) return shape;
        // line part runs between the two degree-3 vertices
        VertexId start = std::min(deg3[0], deg3[1]);
        shape.path = walk_path(g, start, prong_set);
        if (shape.path.size() != k_line) return shape;
        if (shape.path.front() != start) return shape;
        uint32_t d_back = g.degree(shape.path.back());
        if (d_back != 3) return shape;
        // prongs of the front end, then of the back end, each sorted
        std::vector<VertexId> front_p, back_p;
        for (VertexId u : g.neighbors(shape.path.front()))
            if (prong_set.count(u)) front_p.push_back(u);
        for (VertexId u : g.neighbors(shape.path.back()))
            if (prong_set.count(u)) back_p.push_back(u);
        if (front_p.size() != 2 || back_p.size() != 2) return shape;
        std::sort(front_p.begin(), front_p.end());
        std::sort(back_p.begin(), back_p.end());
        shape.prongs = {front_p[0], front_p[1], back_p[0], back_p[1]};
        shape.is_pronged_line = true;
        return shape;
    }
    return shape;
}

// path order of an isolated line component, or empty if not a line
std::vector<VertexId> line_path(const LabeledGraph& g, const std::vector<VertexId>& comp) {
    uint64_t degsum = 0;
    std::vector<VertexId> ends;
    for (VertexId v : comp) {
        uint32_t d = g.degree(v);
        degsum += d;
        if (d > 2) return {};
        if (d == 1) ends.push_back(v);
    }
    if (degsum != 2 * (comp.size() - 1) || ends.size() != 2) return {};
    auto path = walk_path(g, std::min(ends[0], ends[1]), {});
    if (path.size() != comp.size()) return {};
    return path;
}

// ---------------------------------------------------------------------------
// tree helpers (heap order: children of i are 2i+1 and 2i+2)

uint32_t tree_levels_or_throw(const LabeledGraph& g) {
    uint64_t v = g.num_vertices();
    uint32_t levels = 0;
    while ((1ull << (levels + 2)) - 1 <= v) ++levels;
    if ((1ull << (levels + 1)) - 1 != v)
        throw std::invalid_argument("tree detector: vertex count is not 2^(L+1)-1");
    if (g.num_edges() != v - 1)
        throw std::invalid_argument("tree detector: edge count mismatch");
    for (VertexId x = 1; x < v; ++x)
        if (!g.has_edge(x, (x - 1) / 2))
            throw std::invalid_argument("tree detector: not heap-ordered");
    return levels;
}

struct Cherry {
    VertexId parent, child;  // parent at level L-2, chosen (left) child at L-1
    Label parent_label, child_label;
    std::pair<Label, Label> leaves;  // sorted leaf labels
};

std::vector<Cherry> tree_cherries(const LabeledGraph& g) {
    uint32_t levels = tree_levels_or_throw(g);
    if (levels < 3) throw std::invalid_argument("tree detector: needs at least 3 levels");
    std::vector<Cherry> out;
    VertexId lo = (1u << (levels - 2)) - 1;
    VertexId hi = (1u << (levels - 1)) - 1;
    for (VertexId u = lo; u < hi; ++u) {
        Cherry c;
        c.parent = u;
        c.child = 2 * u + 1;
        c.parent_label = g.label(u);
        c.child_label = g.label(c.child);
        Label l1 = g.label(2 * c.child + 1), l2 = g.label(2 * c.child + 2);
        c.leaves = std::minmax(l1, l2);
        out.push_back(c);
    }
    return out;
}

}  // namespace

const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::GeneralSwitch: return "general-switch";
        case WitnessKind::LatticePair: return "lattice-pair";
        case WitnessKind::ProngedLinePair: return "pronged-line-pair";
        case WitnessKind::LabeledLinePair: return "labeled-line-pair";
        case WitnessKind::TreeCherry: return "tree-cherry";
    }
    return "unknown";
}

std::optional<WitnessKind> witness_kind_from_name(const std::string& name) {
    for (WitnessKind k :
         {WitnessKind::GeneralSwitch, WitnessKind::LatticePair, WitnessKind::ProngedLinePair,
          WitnessKind::LabeledLinePair, WitnessKind::TreeCherry})
        if (name == witness_kind_name(k)) return k;
    return std::nullopt;
}

// ---------------------------------------------------------------------------

GeneralDetectReport detect_general_blocking(const LabeledGraph& g, uint32_t r,
                                            const CanonicalOptions& opts) {
    if (r < 1) throw std::invalid_argument("detect_general_blocking: r >= 1");
    GeneralDetectReport report;
    const uint32_t n = g.num_vertices();
    const uint32_t q = g.alphabet_size();
    if (static_cast<uint64_t>(2 * r + 1) * q > 65000)
        throw std::invalid_argument("detect_general_blocking: distance/label attribute overflow");

    std::vector<std::vector<int32_t>> dist(n);
    for (VertexId v = 0; v < n; ++v) dist[v] = bfs_distances(g, v);

    // shells with (distance, label) folded into the vertex label so the
    // isomorphism respects the distance pairing
    auto attributed_shell = [&](VertexId v) {
        auto sh = sphere(g, v, 1, 2 * r);
        LabeledGraph attr(sh.graph.num_vertices(), static_cast<uint32_t>((2 * r + 1) * q));
        for (uint32_t i = 0; i < sh.graph.num_vertices(); ++i)
            attr.set_label(i, static_cast<Label>(sh.dist_to_center[i] * q + sh.graph.label(i)));
        for (auto [a, b] : sh.graph.edges()) attr.add_edge(a, b);
        return attr;
    };

    std::vector<LabeledGraph> shells(n);
    std::vector<bool> shell_done(n, false);
    auto shell_of = [&](VertexId v) -> const LabeledGraph& {
        if (!shell_done[v]) {
            shells[v] = attributed_shell(v);
            shell_done[v] = true;
        }
        return shells[v];
    };

    for (VertexId v = 0; v < n; ++v) {
        for (VertexId w = v + 1; w < n; ++w) {
            bool far = dist[v][w] == kUnreachable || static_cast<uint32_t>(dist[v][w]) > 2 * r;
            if (!far) continue;
            try {
                if (!are_isomorphic(shell_of(v), shell_of(w), opts)) continue;
                BlockingWitness witness{WitnessKind::GeneralSwitch, r, {v}, {w}};
                LabeledGraph switched = apply_blocking_switch(g, witness);
                if (are_isomorphic(g, switched, opts)) continue;
                report.witnesses.push_back(std::move(witness));
            } catch (const BudgetExceeded&) {
                report.budget_exceeded = true;
            }
        }
    }
    return report;
}

std::vector<BlockingWitness> detect_lattice_blocking(const LabeledGraph& g, uint32_t r,
                                                     size_t max_witnesses) {
    if (!g.geometry()) throw std::invalid_argument("detect_lattice_blocking: lattice required");
    if (r < 1 || 2 * r - 1 > g.geometry()->side)
        throw std::invalid_argument("detect_lattice_blocking: need 2r-1 <= n");
    auto boxes = anchored_blocking_boxes(g, r);
    std::map<std::vector<Label>, std::vector<size_t>> groups;
    for (size_t i = 0; i < boxes.size(); ++i) groups[boxes[i].rest].push_back(i);

    std::vector<BlockingWitness> out;
    for (const auto& [rest, members] : groups) {
        for (size_t x = 0; x < members.size() && out.size() < max_witnesses; ++x) {
            for (size_t y = x + 1; y < members.size() && out.size() < max_witnesses; ++y) {
                const auto& bx = boxes[members[x]];
                const auto& by = boxes[members[y]];
                if (bx.center_label == by.center_label) continue;
                BlockingWitness w;
                w.kind = WitnessKind::LatticePair;
                w.radius = r;
                w.a = {std::min(bx.center, by.center)};
                w.b = {std::max(bx.center, by.center)};
                out.push_back(std::move(w));
            }
        }
        if (out.size() >= max_witnesses) break;
    }
    return out;
}

uint64_t count_lattice_blocking(const LabeledGraph& g, uint32_t r) {
    if (!g.geometry()) throw std::invalid_argument("count_lattice_blocking: lattice required");
    if (r < 1 || 2 * r - 1 > g.geometry()->side) return 0;
    auto boxes = anchored_blocking_boxes(g, r);
    std::map<std::vector<Label>, std::map<Label, uint64_t>> groups;
    for (const auto& b : boxes) ++groups[b.rest][b.center_label];
    uint64_t count = 0;  // ordered pairs: equal rest, different centers
    for (const auto& [rest, by_center] : groups) {
        uint64_t total = 0, same = 0;
        for (const auto& [lab, c] : by_center) {
            total += c;
            same += c * c;
        }
        count += total * total - same;
    }
    return count;
}

std::vector<BlockingWitness> detect_er_blocking(const LabeledGraph& g, uint32_t r,
                                                size_t max_witnesses) {
    if (r < 1) throw std::invalid_argument("detect_er_blocking: r >= 1");
    std::vector<ComponentShape> bare, pronged;
    for (const auto& comp : connected_components(g)) {
        auto shape = classify_component(g, comp, r);
        if (shape.is_bare_line) bare.push_back(std::move(shape));
        else if (shape.is_pronged_line) pronged.push_back(std::move(shape));
    }
    std::vector<BlockingWitness> out;
    for (const auto& lb : bare) {
        for (const auto& lp : pronged) {
            if (out.size() >= max_witnesses) return out;
            BlockingWitness w;
            w.kind = WitnessKind::ProngedLinePair;
            w.radius = r;
            w.a = lb.path;
            w.b = lp.path;
            w.b.insert(w.b.end(), lp.prongs.begin(), lp.prongs.end());
            out.push_back(std::move(w));
        }
    }
    return out;
}

uint64_t count_er_blocking(const LabeledGraph& g, uint32_t r) {
    if (r < 1) throw std::invalid_argument("count_er_blocking: r >= 1");
    uint64_t bare = 0, pronged = 0;
    for (const auto& comp : connected_components(g)) {
        auto shape = classify_component(g, comp, r);
        if (shape.is_bare_line) ++bare;
        else if (shape.is_pronged_line) ++pronged;
    }
    return bare * pronged;
}

std::vector<BlockingWitness> detect_labeled_er_blocking(const LabeledGraph& g, uint32_t r,
                                                        size_t max_witnesses) {
    if (r < 1) throw std::invalid_argument("detect_labeled_er_blocking: r >= 1");
    const size_t k_line = 2 * r + 1;
    std::vector<std::vector<VertexId>> lines;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() != k_line) continue;
        auto path = line_path(g, comp);
        if (!path.empty()) lines.push_back(std::move(path));
    }
    auto labels_of = [&](const std::vector<VertexId>& path) {
        std::vector<Label> l;
        l.reserve(path.size());
        for (VertexId v : path) l.push_back(g.label(v));
        return l;
    };
    std::vector<BlockingWitness> out;
    for (size_t i = 0; i < lines.size(); ++i) {
        auto li = labels_of(lines[i]);
        if (li.front() == li.back()) continue;  // endpoints must differ
        for (size_t j = i + 1; j < lines.size(); ++j) {
            if (out.size() >= max_witnesses) return out;
            auto lj = labels_of(lines[j]);
            if (lj.front() == lj.back()) continue;
            // orientation of line j whose middle matches line i's forward
            bool fwd = std::equal(li.begin() + 1, li.end() - 1, lj.begin() + 1);
            bool bwd = std::equal(li.begin() + 1, li.end() - 1, lj.rbegin() + 1);
            if (!fwd && !bwd) continue;
            BlockingWitness w;
            w.kind = WitnessKind::LabeledLinePair;
            w.radius = r;
            w.a = lines[i];
            w.b = lines[j];
            if (!fwd) std::reverse(w.b.begin(), w.b.end());
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<BlockingWitness> detect_tree_blocking(const LabeledGraph& g, size_t max_witnesses) {
    auto cherries = tree_cherries(g);
    std::map<std::pair<Label, Label>, std::vector<size_t>> groups;
    for (size_t i = 0; i < cherries.size(); ++i)
        groups[{cherries[i].parent_label, cherries[i].child_label}].push_back(i);
    std::vector<BlockingWitness> out;
    for (const auto& [key, members] : groups) {
        for (size_t x = 0; x < members.size(); ++x) {
            for (size_t y = x + 1; y < members.size(); ++y) {
                if (out.size() >= max_witnesses) return out;
                const auto& ca = cherries[members[x]];
                const auto& cb = cherries[members[y]];
                if (ca.leaves == cb.leaves) continue;
                BlockingWitness w;
                w.kind = WitnessKind::TreeCherry;
                w.radius = 1;
                w.a = {ca.parent, ca.child, 2 * ca.child + 1, 2 * ca.child + 2};
                w.b = {cb.parent, cb.child, 2 * cb.child + 1, 2 * cb.child + 2};
                out.push_back(std::move(w));
            }
        }
    }
    return out;
}

uint64_t count_tree_blocking(const LabeledGraph& g) {
    auto cherries = tree_cherries(g);
    std::map<std::pair<Label, Label>, std::map<std::pair<Label, Label>, uint64_t>> groups;
    for (const auto& c : cherries) ++groups[{c.parent_label, c.child_label}][c.leaves];
    uint64_t count = 0;  // ordered pairs with matching key, differing leaves
    for (const auto& [key, by_leaves] : groups) {
        uint64_t total = 0, same = 0;
        for (const auto& [lv, c] : by_leaves) {
            total += c;
            same += c * c;
        }
        count += total * total - same;
    }
    return count;
}

// ---------------------------------------------------------------------------

namespace {

// Components of g - v that lie entirely inside N(v): the parts that can be
// re-attached to another vertex without any neighborhood noticing.
std::vector<VertexId> detachable_set(const LabeledGraph& g, VertexId v) {
    std::set<VertexId> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
    std::vector<VertexId> out;
    std::set<VertexId> seen;
    for (VertexId u : g.neighbors(v)) {
        if (seen.count(u)) continue;
        // BFS in g - v from u
        std::vector<VertexId> comp{u};
        std::set<VertexId> comp_seen{u};
        bool contained = true;
        for (size_t head = 0; head < comp.size(); ++head) {
            for (VertexId x : g.neighbors(comp[head])) {
                if (x == v || comp_seen.count(x)) continue;
                comp_seen.insert(x);
                comp.push_back(x);
                if (!nbrs.count(x)) contained = false;
            }
        }
        for (VertexId x : comp) seen.insert(x);
        if (contained)
            for (VertexId x : comp) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LabeledGraph rebuild_with(const LabeledGraph& g,
                          const std::vector<std::pair<VertexId, VertexId>>& remove,
                          const std::vector<std::pair<VertexId, VertexId>>& add,
                          const std::vector<std::pair<VertexId, Label>>& relabel) {
    auto norm = [](std::pair<VertexId, VertexId> e) {
        return e.first < e.second ? e : std::pair<VertexId, VertexId>{e.second, e.first};
    };
    std::set<std::pair<VertexId, VertexId>> edge_set;
    for (auto e : g.edges()) edge_set.insert(e);
    for (auto e : remove) {
        if (!edge_set.erase(norm(e)))
            throw std::invalid_argument("blocking switch: edge to remove is absent");
    }
    for (auto e : add) {
        if (!edge_set.insert(norm(e)).second)
            throw std::invalid_argument("blocking switch: edge to add already present");
    }
    LabeledGraph out(g.num_vertices(), g.alphabet_size());
    for (VertexId v = 0; v < g.num_vertices(); ++v) out.set_label(v, g.label(v));
    for (auto [v, l] : relabel) out.set_label(v, l);
    for (auto [u, v] : edge_set) out.add_edge(u, v);
    if (g.geometry()) out.set_geometry(*g.geometry());
    return out;
}

}  // namespace

LabeledGraph apply_blocking_switch(const LabeledGraph& g, const BlockingWitness& w) {
    switch (w.kind) {
        case WitnessKind::LatticePair: {
            if (w.a.size() != 1 || w.b.size() != 1)
                throw std::invalid_argument("lattice witness: two centers expected");
            VertexId c1 = w.a[0], c2 = w.b[0];
            return rebuild_with(g, {}, {}, {{c1, g.label(c2)}, {c2, g.label(c1)}});
        }
        case WitnessKind::GeneralSwitch: {
            if (w.a.size() != 1 || w.b.size() != 1)
                throw std::invalid_argument("general witness: vertex pair expected");
            VertexId v = w.a[0], x = w.b[0];
            auto dv = detachable_set(g, v);
            auto dw = detachable_set(g, x);
            std::vector<std::pair<VertexId, VertexId>> remove, add;
            for (VertexId u : dv)
                if (g.has_edge(v, u)) {
                    remove.push_back({v, u});
                    add.push_back({x, u});
                }
            for (VertexId u : dw)
                if (g.has_edge(x, u)) {
                    remove.push_back({x, u});
                    add.push_back({v, u});
                }
            return rebuild_with(g, remove, add, {{v, g.label(x)}, {x, g.label(v)}});
        }
        case WitnessKind::ProngedLinePair: {
            size_t k = 2 * w.radius + 1;
            if (w.a.size() != k || w.b.size() != k + 4)
                throw std::invalid_argument("pronged-line witness: bad site counts");
            VertexId bare_end = w.a.front();
            VertexId prong_end = w.b.front();
            VertexId p1 = w.b[k], p2 = w.b[k + 1];  // prongs of b.front()
            return rebuild_with(g, {{prong_end, p1}, {prong_end, p2}},
                                {{bare_end, p1}, {bare_end, p2}}, {});
        }
        case WitnessKind::LabeledLinePair: {
            if (w.a.size() != w.b.size() || w.a.size() < 3)
                throw std::invalid_argument("labeled-line witness: bad site counts");
            VertexId e1 = w.a.front(), e2 = w.b.front();
            return rebuild_with(g, {}, {}, {{e1, g.label(e2)}, {e2, g.label(e1)}});
        }
        case WitnessKind::TreeCherry: {
            if (w.a.size() != 4 || w.b.size() != 4)
                throw std::invalid_argument("tree witness: four sites per cherry expected");
            VertexId va = w.a[1], la1 = w.a[2], la2 = w.a[3];
            VertexId vb = w.b[1], lb1 = w.b[2], lb2 = w.b[3];
            return rebuild_with(
                g, {{va, la1}, {va, la2}, {vb, lb1}, {vb, lb2}},
                {{va, lb1}, {va, lb2}, {vb, la1}, {vb, la2}}, {});
        }
    }
    throw std::invalid_argument("unknown witness kind");
}

bool lattice_symmetry_isomorphic(const LabeledGraph& g1, const LabeledGraph& g2) {
    if (!g1.geometry() || !g2.geometry())
        throw std::invalid_argument("lattice_symmetry_isomorphic: geometry required");
    const auto& geo = *g1.geometry();
    if (geo.side != g2.geometry()->side || geo.dim != g2.geometry()->dim) return false;
    const uint32_t d = geo.dim;
    const uint32_t n = geo.side;

    std::vector<uint32_t> perm(d);
    for (uint32_t i = 0; i < d; ++i) perm[i] = i;
    do {
        for (uint32_t flips = 0; flips < (1u << d); ++flips) {
            bool match = true;
            for (VertexId v = 0; v < g1.num_vertices() && match; ++v) {
                auto c = geo.coord_of(v);
                std::vector<uint32_t> img(d);
                for (uint32_t i = 0; i < d; ++i) {
                    uint32_t x = c[perm[i]];
                    img[i] = (flips >> i) & 1 ? n - 1 - x : x;
                }
                match = g2.label(geo.index_of(img)) == g1.label(v);
            }
            if (match) return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

VerifyOutcome verify_blocking_switch(const LabeledGraph& g, const BlockingWitness& w, uint32_t r,
                                     const CanonicalOptions& opts) {
    LabeledGraph switched = apply_blocking_switch(g, w);
    bool same_observations;
    if (g.geometry() && w.kind == WitnessKind::LatticePair) {
        same_observations = box_label_multiset(g, r) == box_label_multiset(switched, r);
    } else {
        same_observations =
            shatter_code_multiset(g, r, opts) == shatter_code_multiset(switched, r, opts);
    }
    if (!same_observations) return {false, false};

    try {
        bool iso = (g.geometry() && switched.geometry())
                       ? lattice_symmetry_isomorphic(g, switched)
                       : are_isomorphic(g, switched, opts);
        return {!iso, false};
    } catch (const BudgetExceeded&) {
        return {false, true};
    }
}

// ---------------------------------------------------------------------------

bool lattice_forced_gluing(const LabeledGraph& g, uint32_t r) {
    if (!g.geometry()) throw std::invalid_argument("lattice_forced_gluing: lattice required");
    const auto& geo = *g.geometry();
    if (geo.dim != 2)
        throw std::invalid_argument("lattice_forced_gluing: implemented for d = 2");
    const uint32_t n = geo.side;
    if (r == 0 || r > n) return false;
    const uint32_t steps = n - r + 1;  // anchors per axis

    // box label arrays, row-major over anchors
    auto box_at = [&](uint32_t ar, uint32_t ac) {
        std::vector<Label> lab;
        lab.reserve(r * r);
        for (uint32_t i = 0; i < r; ++i)
            for (uint32_t j = 0; j < r; ++j)
                lab.push_back(g.label(geo.index_of({ar + i, ac + j})));
        return lab;
    };
    std::vector<std::vector<Label>> boxes(static_cast<size_t>(steps) * steps);
    for (uint32_t i = 0; i < steps; ++i)
        for (uint32_t j = 0; j < steps; ++j) boxes[i * steps + j] = box_at(i, j);

    // distinct arrays only: a repeated array at one position is the same gluing
    std::vector<std::vector<Label>> distinct = boxes;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    // overlap keys: last r-1 columns / rows (as seen by the next box)
    auto cols_key = [&](const std::vector<Label>& b, bool leading) {
        std::vector<Label> key;
        key.reserve(r * (r - 1));
        for (uint32_t i = 0; i < r; ++i)
            for (uint32_t j = leading ? 0 : 1; j < (leading ? r - 1 : r); ++j)
                key.push_back(b[i * r + j]);
        return key;
    };
    auto rows_key = [&](const std::vector<Label>& b, bool leading) {
        std::vector<Label> key;
        key.reserve(r * (r - 1));
        for (uint32_t i = leading ? 0 : 1; i < (leading ? r - 1 : r); ++i)
            for (uint32_t j = 0; j < r; ++j) key.push_back(b[i * r + j]);
        return key;
    };

    // forcedness in one scan direction; `reversed` flips to the opposite corner
    auto forced_scan = [&](bool reversed) {
        // index boxes by their leading keys
        std::map<std::vector<Label>, std::vector<size_t>> by_cols, by_rows;
        for (size_t idx = 0; idx < distinct.size(); ++idx) {
            by_cols[cols_key(distinct[idx], !reversed)].push_back(idx);
            by_rows[rows_key(distinct[idx], !reversed)].push_back(idx);
        }
        for (uint32_t i = 0; i < steps; ++i) {
            for (uint32_t j = 0; j < steps; ++j) {
                uint32_t ai = reversed ? steps - 1 - i : i;
                uint32_t aj = reversed ? steps - 1 - j : j;
                const auto& truth = boxes[ai * steps + aj];
                bool has_v = i > 0;  // scanned neighbor along rows
                bool has_h = j > 0;  // scanned neighbor along columns
                if (!has_v && !has_h) continue;  // the seed; the reversed scan covers it
                size_t matches = 0;
                if (has_h) {
                    uint32_t pj = reversed ? aj + 1 : aj - 1;
                    auto key = cols_key(boxes[ai * steps + pj], reversed);
                    auto it = by_cols.find(key);
                    if (it == by_cols.end()) return false;
                    for (size_t idx : it->second) {
                        if (has_v) {
                            uint32_t pi = reversed ? ai + 1 : ai - 1;
                            auto rkey = rows_key(boxes[pi * steps + aj], reversed);
                            if (rows_key(distinct[idx], !reversed) != rkey) continue;
                        }
                        ++matches;
                        if (matches > 1) break;
                    }
                } else {
                    uint32_t pi = reversed ? ai + 1 : ai - 1;
                    auto key = rows_key(boxes[pi * steps + aj], reversed);
                    auto it = by_rows.find(key);
                    if (it == by_rows.end()) return false;
                    matches = it->second.size();
                }
                // the true box always matches its own overlaps, so matches >= 1;
                // anything beyond one distinct fit is an ambiguity
                (void)truth;
                if (matches != 1) return false;
            }
        }
        return true;
    };

    return forced_scan(false) && forced_scan(true);
}

Verdict judge(const LabeledGraph& g, uint32_t r, const DetectorSet& detectors,
              const JudgeOptions& opts) {
    Verdict verdict;
    bool identifiable = false;
    std::string id_cert;
    std::string undetermined_reason;

    const bool box_mode = g.geometry().has_value();
    if (box_mode) {
        const uint32_t n = g.geometry()->side;
        if (r >= n) {
            identifiable = true;
            id_cert = "box-covers-grid";
        } else if (r >= 2) {
            auto arrays = box_label_multiset(g, r - 1);
            bool unique =
                std::adjacent_find(arrays.begin(), arrays.end()) == arrays.end();
            if (unique) {
                identifiable = true;
                id_cert = "box-uniqueness";
            } else if (lattice_forced_gluing(g, r)) {
                identifiable = true;
                id_cert = "forced-gluing";
            }
        } else if (r == 1 && lattice_forced_gluing(g, r)) {
            identifiable = true;
            id_cert = "forced-gluing";
        }
    } else {
        try {
            uint32_t diam = max_component_diameter(g, opts.diameter_budget);
            if (r >= diam) {
                identifiable = true;
                id_cert = "radius-covers-diameter";
            }
        } catch (const BudgetExceeded&) {
            undetermined_reason = "diameter budget exceeded";
        }
        if (!identifiable && r >= 1) {
            try {
                if (distinct_rooted_neighborhoods(g, r - 1, opts.canonical)) {
                    identifiable = true;
                    id_cert = "overlap-uniqueness";
                }
            } catch (const BudgetExceeded&) {
                undetermined_reason = "canonicalization budget exceeded";
            }
        }
    }

    std::optional<BlockingWitness> nonid;
    bool verify_budget = false;
    auto try_witnesses = [&](const std::vector<BlockingWitness>& ws) {
        for (const auto& w : ws) {
            if (nonid) return;
            auto outcome = verify_blocking_switch(g, w, r, opts.canonical);
            verify_budget |= outcome.budget_exceeded;
            if (outcome.passed) nonid = w;
        }
    };
    if (detectors.lattice && box_mode && 2 * r - 1 <= g.geometry()->side)
        try_witnesses(detect_lattice_blocking(g, r, opts.max_witness_checks));
    if (!nonid && detectors.er_pronged_line)
        try_witnesses(detect_er_blocking(g, r, opts.max_witness_checks));
    if (!nonid && detectors.labeled_er_lines)
        try_witnesses(detect_labeled_er_blocking(g, r, opts.max_witness_checks));
    if (!nonid && detectors.tree)
        try_witnesses(detect_tree_blocking(g, opts.max_witness_checks));
    if (!nonid && detectors.general) {
        auto report = detect_general_blocking(g, r, opts.canonical);
        verify_budget |= report.budget_exceeded;
        try_witnesses(report.witnesses);
    }

    if (identifiable && nonid)
        throw InternalContradiction(
            "both an identifiability certificate and a verified blocking witness fired");

    if (identifiable) {
        verdict.status = VerdictStatus::IdentifiableCertified;
        verdict.certificate = id_cert;
    } else if (nonid) {
        verdict.status = VerdictStatus::NonIdentifiableCertified;
        verdict.witness = nonid;
        verdict.certificate = witness_kind_name(nonid->kind);
    } else {
        verdict.status = VerdictStatus::Undetermined;
        if (verify_budget) undetermined_reason = "isomorphism budget exceeded";
        verdict.certificate =
            undetermined_reason.empty() ? "no certificate fired" : undetermined_reason;
    }
    return verdict;
}

}  // namespace shotgun
