#include "shotgun/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <limits>
#include <optional>

namespace shotgun {

namespace {

constexpr uint32_t kNoRoot = std::numeric_limits<uint32_t>::max();
constexpr size_t kInlineLimit = 512;  // raw canonical form below this, digest above

void append_u16(std::string& s, uint16_t x) {
    s.push_back(static_cast<char>(x & 0xff));
    s.push_back(static_cast<char>(x >> 8));
}
void append_u32(std::string& s, uint32_t x) {
    for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}
void append_u64(std::string& s, uint64_t x) {
    for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

uint64_t mix64(uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// 128-bit digest: two independently seeded 64-bit mixing passes.
void digest128(const std::string& data, uint64_t out[2]) {
    uint64_t h0 = 0x9AE16A3B2F90404FULL, h1 = 0xC3A5C85C97CB3127ULL;
    size_t i = 0;
    while (i + 8 <= data.size()) {
        uint64_t block;
        std::memcpy(&block, data.data() + i, 8);
        h0 = mix64(h0 ^ block) * 0x100000001B3ULL;
        h1 = mix64(h1 + block) ^ (h1 >> 29);
        i += 8;
    }
    uint64_t tail = 0;
    for (size_t j = 0; i + j < data.size(); ++j)
        tail |= static_cast<uint64_t>(static_cast<unsigned char>(data[i + j])) << (8 * j);
    h0 = mix64(h0 ^ tail ^ data.size());
    h1 = mix64(h1 + tail + data.size());
    out[0] = h0;
    out[1] = h1;
}

std::string finalize_code(char prefix, uint32_t n, uint64_t m, std::string body) {
    std::string out;
    if (body.size() <= kInlineLimit) {
        out.push_back(prefix);
        out += body;
        return out;
    }
    uint64_t h[2];
    digest128(body, h);
    out.push_back('H');
    out.push_back(prefix);
    append_u32(out, n);
    append_u64(out, m);
    append_u64(out, h[0]);
    append_u64(out, h[1]);
    return out;
}

// ---------------------------------------------------------------------------
// Trees: classical bottom-up canonical string, rooted at a given vertex or at
// the tree center. Refinement search would blow up on label-symmetric trees,
// so all forests take this path.

bool component_is_tree(const LabeledGraph& g, const std::vector<VertexId>& comp) {
    uint64_t edges = 0;
    for (VertexId v : comp) edges += g.degree(v);
    return edges / 2 == comp.size() - 1;
}

std::string ahu_code(const LabeledGraph& g, VertexId root) {
    // iterative post-order to avoid deep recursion on path-like trees
    std::vector<VertexId> order;
    std::vector<VertexId> parent(g.num_vertices(), kNoRoot);
    std::vector<VertexId> stack{root};
    std::vector<bool> seen(g.num_vertices(), false);
    seen[root] = true;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (VertexId w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    std::vector<std::vector<std::string>> child_codes(g.num_vertices());
    std::vector<std::string> code(g.num_vertices());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        VertexId v = *it;
        auto& kids = child_codes[v];
        std::sort(kids.begin(), kids.end());
        std::string c;
        c.push_back('(');
        append_u16(c, g.label(v));
        for (auto& k : kids) c += k;
        c.push_back(')');
        code[v] = std::move(c);
        child_codes[v].clear();
        child_codes[v].shrink_to_fit();
        if (parent[v] != kNoRoot) child_codes[parent[v]].push_back(code[v]);
    }
    return code[root];
}

// 1 or 2 centers of a tree component, by leaf peeling.
std::vector<VertexId> tree_centers(const LabeledGraph& g, const std::vector<VertexId>& comp) {
    if (comp.size() == 1) return {comp[0]};
    std::vector<uint32_t> deg(g.num_vertices(), 0);
    std::vector<bool> in_comp(g.num_vertices(), false);
    for (VertexId v : comp) in_comp[v] = true;
    std::deque<VertexId> leaves;
    for (VertexId v : comp) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) leaves.push_back(v);
    }
    size_t remaining = comp.size();
    while (remaining > 2) {
        size_t layer = leaves.size();
        remaining -= layer;
        for (size_t i = 0; i < layer; ++i) {
            VertexId v = leaves.front();
            leaves.pop_front();
            deg[v] = 0;
            for (VertexId w : g.neighbors(v))
                if (in_comp[w] && deg[w] > 0 && --deg[w] == 1) leaves.push_back(w);
        }
    }
    std::vector<VertexId> centers(leaves.begin(), leaves.end());
    std::sort(centers.begin(), centers.end());
    return centers;
}

// ---------------------------------------------------------------------------
// General connected graphs: exact color refinement plus individualization
// with trace pruning. Colors are dense ranks; all tie-breaking is on
// partition structure only, never on vertex ids, so the minimal leaf is a
// canonical form.

struct RefineContext {
    const LabeledGraph& g;
    const std::vector<VertexId>& verts;          // component, sorted
    std::vector<uint32_t> local_id;              // host id -> position in verts
    uint64_t budget;
    uint64_t used = 0;

    std::optional<std::vector<uint32_t>> best_trace;
    std::string best_leaf;

    RefineContext(const LabeledGraph& graph, const std::vector<VertexId>& vs, uint64_t b)
        : g(graph), verts(vs), local_id(graph.num_vertices(), 0), budget(b) {
        for (uint32_t i = 0; i < vs.size(); ++i) local_id[vs[i]] = i;
    }
};

// One full refinement pass: iterate signature ranking until the partition is
// stable. colors are dense in [0, k).
uint32_t refine_to_stable(RefineContext& ctx, std::vector<uint32_t>& colors) {
    const size_t n = ctx.verts.size();
    uint32_t num_colors = *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<std::vector<uint32_t>> sig(n);
    std::vector<uint32_t> idx(n);
    for (;;) {
        for (size_t i = 0; i < n; ++i) {
            auto& s = sig[i];
            s.clear();
            s.push_back(colors[i]);
            for (VertexId w : ctx.g.neighbors(ctx.verts[i])) s.push_back(colors[ctx.local_id[w]]);
            std::sort(s.begin() + 1, s.end());
        }
        for (size_t i = 0; i < n; ++i) idx[i] = static_cast<uint32_t>(i);
        std::sort(idx.begin(), idx.end(),
                  [&](uint32_t a, uint32_t b) { return sig[a] < sig[b]; });
        std::vector<uint32_t> next(n);
        uint32_t c = 0;
        next[idx[0]] = 0;
        for (size_t i = 1; i < n; ++i) {
            if (sig[idx[i]] != sig[idx[i - 1]]) ++c;
            next[idx[i]] = c;
        }
        uint32_t next_count = c + 1;
        if (next_count == num_colors) {
            colors = std::move(next);
            return num_colors;
        }
        colors = std::move(next);
        num_colors = next_count;
    }
}

// Serialization of a discrete coloring: vertices renamed by color rank.
std::string serialize_leaf(const RefineContext& ctx, const std::vector<uint32_t>& colors,
                           uint32_t root_local) {
    const size_t n = ctx.verts.size();
    std::string out;
    append_u32(out, static_cast<uint32_t>(n));
    if (root_local != kNoRoot)
        append_u32(out, colors[root_local]);
    else
        append_u32(out, kNoRoot);
    std::vector<uint32_t> by_rank(n);
    for (size_t i = 0; i < n; ++i) by_rank[colors[i]] = static_cast<uint32_t>(i);
    for (size_t r = 0; r < n; ++r) append_u16(out, ctx.g.label(ctx.verts[by_rank[r]]));
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (size_t i = 0; i < n; ++i) {
        for (VertexId w : ctx.g.neighbors(ctx.verts[i])) {
            uint32_t j = ctx.local_id[w];
            uint32_t a = colors[i], b = colors[j];
            if (a < b) edges.emplace_back(a, b);
        }
    }
    std::sort(edges.begin(), edges.end());
    append_u64(out, edges.size());
    for (auto [a, b] : edges) {
        append_u32(out, a);
        append_u32(out, b);
    }
    return out;
}

void search(RefineContext& ctx, std::vector<uint32_t> colors, std::vector<uint32_t> trace,
            uint32_t root_local) {
    uint32_t num_colors = refine_to_stable(ctx, colors);
    const size_t n = ctx.verts.size();

    // trace element: cell sizes in color order (isomorphism-invariant)
    std::vector<uint32_t> cell_size(num_colors, 0);
    for (uint32_t c : colors) ++cell_size[c];
    trace.push_back(num_colors);
    trace.insert(trace.end(), cell_size.begin(), cell_size.end());

    if (ctx.best_trace) {
        size_t k = std::min(trace.size(), ctx.best_trace->size());
        for (size_t i = 0; i < k; ++i) {
            if (trace[i] < (*ctx.best_trace)[i]) {
                ctx.best_trace.reset();  // this branch family wins outright
                ctx.best_leaf.clear();
                break;
            }
            if (trace[i] > (*ctx.best_trace)[i]) return;  // pruned
        }
    }

    if (num_colors == n) {
        std::string leaf = serialize_leaf(ctx, colors, root_local);
        if (!ctx.best_trace) {
            ctx.best_trace = trace;
            ctx.best_leaf = std::move(leaf);
        } else if (trace < *ctx.best_trace ||
                   (trace == *ctx.best_trace && leaf < ctx.best_leaf)) {
            ctx.best_trace = trace;
            ctx.best_leaf = std::move(leaf);
        }
        return;
    }

    // smallest-indexed non-singleton cell
    uint32_t target = kNoRoot;
    for (uint32_t c = 0; c < num_colors; ++c) {
        if (cell_size[c] > 1) {
            target = c;
            break;
        }
    }
    for (size_t i = 0; i < n; ++i) {
        if (colors[i] != target) continue;
        if (++ctx.used > ctx.budget)
            throw BudgetExceeded("canonicalization exceeded its work budget");
        auto child = colors;
        child[i] = num_colors;  // individualize
        search(ctx, std::move(child), trace, root_local);
    }
}

// Canonical code of one connected component; root_host = kNoRoot for unrooted.
std::string component_code(const LabeledGraph& g, const std::vector<VertexId>& comp,
                           VertexId root_host, const CanonicalOptions& opts) {
    if (component_is_tree(g, comp)) {
        std::string body;
        if (root_host != kNoRoot) {
            body = ahu_code(g, root_host);
        } else {
            auto centers = tree_centers(g, comp);
            body = ahu_code(g, centers[0]);
            for (size_t i = 1; i < centers.size(); ++i)
                body = std::min(body, ahu_code(g, centers[i]));
        }
        uint64_t edges = comp.size() - 1;
        return finalize_code('T', static_cast<uint32_t>(comp.size()), edges, std::move(body));
    }

    RefineContext ctx(g, comp, opts.work_budget);
    uint32_t root_local = kNoRoot;
    std::vector<uint32_t> init(comp.size());
    // seed colors: (root flag, label, degree) ranked densely
    std::vector<std::pair<std::tuple<uint32_t, Label, uint32_t>, uint32_t>> keys(comp.size());
    for (uint32_t i = 0; i < comp.size(); ++i) {
        VertexId v = comp[i];
        uint32_t is_root = (v == root_host) ? 0u : 1u;
        if (v == root_host) root_local = i;
        keys[i] = {{is_root, g.label(v), g.degree(v)}, i};
    }
    std::sort(keys.begin(), keys.end());
    uint32_t c = 0;
    init[keys[0].second] = 0;
    for (size_t i = 1; i < keys.size(); ++i) {
        if (keys[i].first != keys[i - 1].first) ++c;
        init[keys[i].second] = c;
    }

    search(ctx, std::move(init), {}, root_local);
    uint64_t edges = 0;
    for (VertexId v : comp) edges += g.degree(v);
    return finalize_code('R', static_cast<uint32_t>(comp.size()), edges / 2,
                         std::move(ctx.best_leaf));
}

std::vector<VertexId> component_of(const LabeledGraph& g, VertexId v) {
    auto dist = bfs_distances(g, v);
    std::vector<VertexId> comp;
    for (VertexId w = 0; w < g.num_vertices(); ++w)
        if (dist[w] != kUnreachable) comp.push_back(w);
    return comp;
}

}  // namespace

CanonicalCode canonical_code_rooted(const LabeledGraph& g, VertexId root,
                                    const CanonicalOptions& opts) {
    if (root >= g.num_vertices())
        throw std::invalid_argument("canonical_code_rooted: invalid root");
    auto comp = component_of(g, root);
    if (comp.size() != g.num_vertices()) {
        // root's component only; rooted neighborhoods are connected by
        // construction but adversarial inputs may not be
        auto sub = induced_subgraph(g, comp);
        VertexId local_root = static_cast<VertexId>(
            std::lower_bound(sub.to_host.begin(), sub.to_host.end(), root) -
            sub.to_host.begin());
        std::vector<VertexId> all(sub.graph.num_vertices());
        for (uint32_t i = 0; i < all.size(); ++i) all[i] = i;
        return {component_code(sub.graph, all, local_root, opts)};
    }
    return {component_code(g, comp, root, opts)};
}

CanonicalCode canonical_code(const RootedNeighborhood& nb, const CanonicalOptions& opts) {
    return canonical_code_rooted(nb.graph, nb.center, opts);
}

CanonicalCode canonical_code_unrooted(const LabeledGraph& g, const CanonicalOptions& opts) {
    auto comps = connected_components(g);
    if (comps.size() == 1) return {component_code(g, comps[0], kNoRoot, opts)};
    std::vector<std::string> codes;
    codes.reserve(comps.size());
    for (const auto& comp : comps) codes.push_back(component_code(g, comp, kNoRoot, opts));
    std::sort(codes.begin(), codes.end());
    std::string out;
    out.push_back('M');
    append_u64(out, codes.size());
    for (const auto& c : codes) {
        append_u64(out, c.size());
        out += c;
    }
    return {std::move(out)};
}

bool are_isomorphic(const LabeledGraph& g1, const LabeledGraph& g2,
                    const CanonicalOptions& opts) {
    if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges()) return false;

    auto invariant = [](const LabeledGraph& g) {
        std::vector<std::pair<Label, uint32_t>> ld(g.num_vertices());
        for (VertexId v = 0; v < g.num_vertices(); ++v) ld[v] = {g.label(v), g.degree(v)};
        std::sort(ld.begin(), ld.end());
        return ld;
    };
    if (invariant(g1) != invariant(g2)) return false;

    auto comp_sizes = [](const LabeledGraph& g) {
        auto comps = connected_components(g);
        std::vector<size_t> sizes;
        sizes.reserve(comps.size());
        for (auto& c : comps) sizes.push_back(c.size());
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    };
    if (comp_sizes(g1) != comp_sizes(g2)) return false;

    return canonical_code_unrooted(g1, opts) == canonical_code_unrooted(g2, opts);
}

std::vector<uint32_t> stable_coloring(const LabeledGraph& g) {
    std::vector<VertexId> all(g.num_vertices());
    for (uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    if (all.empty()) return {};
    RefineContext ctx(g, all, 1);
    std::vector<uint32_t> colors(g.num_vertices());
    std::vector<std::pair<std::pair<Label, uint32_t>, uint32_t>> keys(g.num_vertices());
    for (uint32_t v = 0; v < g.num_vertices(); ++v) keys[v] = {{g.label(v), g.degree(v)}, v};
    std::sort(keys.begin(), keys.end());
    uint32_t c = 0;
    colors[keys[0].second] = 0;
    for (size_t i = 1; i < keys.size(); ++i) {
        if (keys[i].first != keys[i - 1].first) ++c;
        colors[keys[i].second] = c;
    }
    refine_to_stable(ctx, colors);
    return colors;
}

}  // namespace shotgun
