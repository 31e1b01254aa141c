#include "shotgun/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace shotgun {

namespace {

// (r-1)-ball of `v` inside a neighborhood graph, as a rooted code. For the
// center and for neighbors of the center this equals the code of the true
// (r-1)-neighborhood of the corresponding host vertex.
CanonicalCode inner_code(const LabeledGraph& g, VertexId v, uint32_t inner_radius,
                         const CanonicalOptions& opts) {
    auto nb = extract_neighborhood(g, v, inner_radius);
    return canonical_code(nb, opts);
}

struct InputFacts {
    CanonicalCode center_code;
    Label center_label = 0;
    std::vector<std::pair<CanonicalCode, Label>> neighbor_codes;  // sorted by code
    bool internal_collision = false;  // duplicate codes inside the star
    std::optional<CanonicalCode> full_code;                       // lazy
};

}  // namespace

ReconstructResult reconstruct(const NeighborhoodMultiset& ms, const ReconstructOptions& opts) {
    if (ms.mode != ShatterMode::Rooted)
        throw std::invalid_argument("reconstruct: rooted neighborhoods required");
    if (ms.radius == 0)
        throw std::invalid_argument("reconstruct: radius must be >= 1");
    const uint32_t r = ms.radius;
    const size_t n_inputs = ms.rooted.size();

    ReconstructResult result;
    if (n_inputs == 0) {
        result.graph = LabeledGraph(0, 1);
        return result;
    }

    std::vector<InputFacts> facts(n_inputs);
    uint32_t alphabet = 1;
    for (size_t i = 0; i < n_inputs; ++i) {
        const auto& nb = ms.rooted[i];
        alphabet = std::max(alphabet, nb.graph.alphabet_size());
        auto& f = facts[i];
        f.center_code = inner_code(nb.graph, nb.center, r - 1, opts.canonical);
        f.center_label = nb.graph.label(nb.center);
        for (VertexId u : nb.graph.neighbors(nb.center))
            f.neighbor_codes.emplace_back(inner_code(nb.graph, u, r - 1, opts.canonical),
                                          nb.graph.label(u));
        std::sort(f.neighbor_codes.begin(), f.neighbor_codes.end());
        for (size_t k = 0; k + 1 < f.neighbor_codes.size(); ++k)
            if (f.neighbor_codes[k].first == f.neighbor_codes[k + 1].first)
                f.internal_collision = true;
        for (const auto& [code, lab] : f.neighbor_codes)
            if (code == f.center_code) f.internal_collision = true;
    }
    auto full_code_of = [&](size_t i) -> const CanonicalCode& {
        if (!facts[i].full_code)
            facts[i].full_code = canonical_code(ms.rooted[i], opts.canonical);
        return *facts[i].full_code;
    };

    // global vertices are identified by their (r-1)-code
    std::map<CanonicalCode, uint32_t> vertex_of;
    std::vector<Label> labels;
    std::vector<std::set<uint32_t>> adjacency;
    std::vector<const CanonicalCode*> code_of_vertex;
    auto intern = [&](const CanonicalCode& code, Label lab) {
        auto [it, inserted] = vertex_of.emplace(code, static_cast<uint32_t>(labels.size()));
        if (inserted) {
            labels.push_back(lab);
            adjacency.emplace_back();
            code_of_vertex.push_back(&it->first);
        }
        return it->second;
    };

    // unconsumed inputs bucketed by center code
    std::map<CanonicalCode, std::vector<size_t>> pending;
    for (size_t i = 0; i < n_inputs; ++i) pending[facts[i].center_code].push_back(i);
    size_t n_pending = n_inputs;

    std::vector<bool> expanded;  // per global vertex: own neighborhood glued
    // placed-but-unexpanded vertices in ascending code order
    std::set<std::pair<CanonicalCode, uint32_t>> frontier;

    enum class PlaceError { Omitted, Collision };
    auto place = [&](size_t input, uint32_t at_vertex) -> std::optional<PlaceError> {
        const auto& f = facts[input];
        if (f.internal_collision) return PlaceError::Collision;
        // every already-known neighbor of the target must be listed by the
        // input that owns this vertex, otherwise the gluings conflict
        for (uint32_t w : adjacency[at_vertex]) {
            bool listed = std::binary_search(f.neighbor_codes.begin(), f.neighbor_codes.end(),
                                             std::make_pair(*code_of_vertex[w], labels[w]));
            if (!listed) return PlaceError::Omitted;
        }
        for (const auto& [code, lab] : f.neighbor_codes) {
            uint32_t u = intern(code, lab);
            expanded.resize(labels.size(), false);
            adjacency[at_vertex].insert(u);
            adjacency[u].insert(at_vertex);
            if (!expanded[u]) frontier.insert({code, u});
        }
        auto& bucket = pending[f.center_code];
        bucket.erase(std::find(bucket.begin(), bucket.end(), input));
        --n_pending;
        expanded.resize(labels.size(), false);
        expanded[at_vertex] = true;
        frontier.erase({f.center_code, at_vertex});
        return std::nullopt;
    };
    auto fail = [&](PlaceError e) {
        if (e == PlaceError::Collision) {
            result.status = ReconstructStatus::AmbiguousOverlap;
            result.detail = "inner codes collide within one neighborhood";
        } else {
            result.status = ReconstructStatus::Inconsistent;
            result.detail = "glued neighborhood omits an existing neighbor of its center";
        }
    };

    while (n_pending > 0) {
        // components are assembled independently; seed the next one with the
        // smallest pending center code
        size_t seed = SIZE_MAX;
        for (auto& [code, bucket] : pending) {
            if (!bucket.empty()) {
                seed = bucket.front();
                break;
            }
        }
        uint32_t seed_vertex = intern(facts[seed].center_code, facts[seed].center_label);
        expanded.resize(labels.size(), false);
        if (expanded[seed_vertex]) {
            result.status = ReconstructStatus::Inconsistent;
            result.detail = "duplicate center code across glued components";
            return result;
        }
        if (auto err = place(seed, seed_vertex)) {
            fail(*err);
            return result;
        }

        while (!frontier.empty()) {
            auto [fcode, fvertex] = *frontier.begin();

            auto it = pending.find(fcode);
            if (it == pending.end() || it->second.empty()) {
                result.status = ReconstructStatus::Inconsistent;
                result.detail = "no unused neighborhood matches a frontier vertex";
                return result;
            }
            auto& candidates = it->second;
            if (candidates.size() > 1) {
                // same center code: gluing is still forced if the full
                // radius-r neighborhoods are identical
                const CanonicalCode& first = full_code_of(candidates[0]);
                for (size_t k = 1; k < candidates.size(); ++k) {
                    if (full_code_of(candidates[k]) != first) {
                        result.status = ReconstructStatus::AmbiguousOverlap;
                        result.detail = "two distinct gluings match one frontier vertex";
                        return result;
                    }
                }
            }
            if (auto err = place(candidates.front(), fvertex)) {
                fail(*err);
                return result;
            }
        }
    }

    LabeledGraph out(static_cast<uint32_t>(labels.size()), alphabet);
    for (uint32_t v = 0; v < labels.size(); ++v) out.set_label(v, labels[v]);
    for (uint32_t v = 0; v < adjacency.size(); ++v)
        for (uint32_t w : adjacency[v])
            if (v < w) out.add_edge(v, w);

    if (opts.verify_output) {
        auto got = shatter_code_multiset(out, r, opts.canonical);
        std::vector<CanonicalCode> want;
        want.reserve(n_inputs);
        for (size_t i = 0; i < n_inputs; ++i) want.push_back(full_code_of(i));
        std::sort(want.begin(), want.end());
        if (got != want) {
            result.status = ReconstructStatus::Inconsistent;
            result.detail = "re-shattered output disagrees with the input multiset";
            return result;
        }
    }
    result.graph = std::move(out);
    return result;
}

}  // namespace shotgun
