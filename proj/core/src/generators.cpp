#include "shotgun/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace shotgun {

namespace {

void check_budget(uint64_t vertices, const GeneratorBudget& budget) {
    if (vertices > budget.max_vertices)
        throw BudgetError("instance size exceeds the generator memory budget");
}

// Bernoulli process over a linear index range via geometric gap skipping.
template <typename Emit>
void sample_sparse(uint64_t count, double p, Rng& rng, Emit&& emit) {
    if (p <= 0.0) return;
    const double log1mp = std::log1p(-p);
    uint64_t t = 0;
    for (;;) {
        double u = rng.next_double();
        // gap to the next success
        uint64_t gap = static_cast<uint64_t>(std::floor(std::log1p(-u) / log1mp));
        if (t + gap < t || t + gap >= count) return;  // overflow or done
        t += gap;
        emit(t);
        if (++t >= count) return;
    }
}

void sample_edges(LabeledGraph& g, uint32_t N, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability out of [0,1]");
    if (N < 2 || p == 0.0) return;
    const uint64_t pairs = static_cast<uint64_t>(N) * (N - 1) / 2;
    if (p >= 1.0) {
        for (uint32_t u = 0; u < N; ++u)
            for (uint32_t v = u + 1; v < N; ++v) g.add_edge(u, v);
        return;
    }
    // decode a linear pair index t into (u, v), u < v, row-major over u
    auto decode = [N](uint64_t t) {
        uint32_t u = 0;
        uint64_t row = N - 1;
        while (t >= row) {
            t -= row;
            --row;
            ++u;
        }
        return std::pair<uint32_t, uint32_t>(u, static_cast<uint32_t>(u + 1 + t));
    };
    if (p < 0.05) {
        sample_sparse(pairs, p, rng, [&](uint64_t t) {
            auto [u, v] = decode(t);
            g.add_edge(u, v);
        });
    } else {
        for (uint32_t u = 0; u < N; ++u)
            for (uint32_t v = u + 1; v < N; ++v)
                if (rng.next_bernoulli(p)) g.add_edge(u, v);
    }
}

}  // namespace

LabeledGraph gen_lattice(uint32_t n, uint32_t d, const LabelDistribution& dist, Seed seed,
                         const GeneratorBudget& budget) {
    if (n < 2 || d < 1) throw std::invalid_argument("gen_lattice: require n >= 2, d >= 1");
    LatticeGeometry geo{n, d};
    uint64_t sites = geo.num_sites();
    check_budget(sites, budget);

    LabeledGraph g(static_cast<uint32_t>(sites), dist.alphabet_size());
    Rng rng(seed);
    for (VertexId v = 0; v < sites; ++v) g.set_label(v, static_cast<Label>(dist.sample(rng)));

    // nearest-neighbor edges: +1 step along each axis
    uint64_t stride = 1;
    for (uint32_t a = d; a-- > 0;) {
        for (VertexId v = 0; v < sites; ++v) {
            uint64_t coord = (v / stride) % n;
            if (coord + 1 < n) g.add_edge(v, static_cast<VertexId>(v + stride));
        }
        stride *= n;
    }
    g.set_geometry(geo);
    return g;
}

LabeledGraph gen_er(uint32_t N, double p, Seed seed, const GeneratorBudget& budget) {
    if (N < 1) throw std::invalid_argument("gen_er: require N >= 1");
    check_budget(N, budget);
    LabeledGraph g(N, 1);
    Rng rng(seed);
    sample_edges(g, N, p, rng);
    return g;
}

LabeledGraph gen_labeled_er(uint32_t N, double p, const LabelDistribution& dist, Seed seed,
                            const GeneratorBudget& budget) {
    if (N < 1) throw std::invalid_argument("gen_labeled_er: require N >= 1");
    check_budget(N, budget);
    LabeledGraph g(N, dist.alphabet_size());
    Rng rng(seed);
    sample_edges(g, N, p, rng);  // edges first: q = 1 reduces to gen_er bit-for-bit
    for (VertexId v = 0; v < N; ++v) g.set_label(v, static_cast<Label>(dist.sample(rng)));
    return g;
}

LabeledGraph gen_binary_tree(uint32_t levels, uint32_t q, Seed seed,
                             const GeneratorBudget& budget) {
    if (levels < 2 || q < 1)
        throw std::invalid_argument("gen_binary_tree: require levels >= 2, q >= 1");
    if (levels > 31) throw BudgetError("gen_binary_tree: levels too large");
    uint64_t vertices = (1ull << (levels + 1)) - 1;
    check_budget(vertices, budget);
    LabeledGraph g(static_cast<uint32_t>(vertices), q);
    Rng rng(seed);
    for (VertexId v = 0; v < vertices; ++v)
        g.set_label(v, static_cast<Label>(rng.next_below(q)));
    for (VertexId v = 1; v < vertices; ++v) g.add_edge((v - 1) / 2, v);
    return g;
}

Puzzle gen_jigsaw(uint32_t n, uint32_t q, Seed seed, const GeneratorBudget& budget) {
    if (n < 1 || q < 1) throw std::invalid_argument("gen_jigsaw: require n >= 1, q >= 1");
    check_budget(static_cast<uint64_t>(n) * n, budget);
    Puzzle p;
    p.n = n;
    p.q = q;
    Rng rng(seed);
    p.h_edges.assign(n + 1, std::vector<uint32_t>(n));
    p.v_edges.assign(n, std::vector<uint32_t>(n + 1));
    for (auto& row : p.h_edges)
        for (auto& c : row) c = static_cast<uint32_t>(rng.next_below(q));
    for (auto& row : p.v_edges)
        for (auto& c : row) c = static_cast<uint32_t>(rng.next_below(q));
    return p;
}

}  // namespace shotgun
