#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "shotgun/graph.hpp"
#include "shotgun/neighborhood.hpp"

namespace shotgun {

// Thrown when an isomorphism / canonicalization call exceeds its work budget.
// Callers treat the verdict as undetermined.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct CanonicalOptions {
    // Number of individualization nodes the backtracking search may expand.
    uint64_t work_budget = 1u << 20;
};

// Totally ordered key; equal keys <=> the rooted labeled graphs are isomorphic
// by a root- and label-preserving bijection. Codes of graphs whose canonical
// serialization exceeds an internal size cap are 128-bit digests, so equality
// is exact up to astronomically unlikely hash collisions; small graphs
// (everything the brute-force test oracles can reach) store the full
// canonical form and are exact unconditionally.
struct CanonicalCode {
    std::string bytes;

    auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const RootedNeighborhood& nb, const CanonicalOptions& opts = {});

// Canonical key of g rooted at `root`, without copying g. Equivalent to
// canonical_code(extract_neighborhood(g, root, infinity)) when g is connected.
CanonicalCode canonical_code_rooted(const LabeledGraph& g, VertexId root,
                                    const CanonicalOptions& opts = {});

// Canonical key of an unrooted graph (components sorted canonically).
CanonicalCode canonical_code_unrooted(const LabeledGraph& g, const CanonicalOptions& opts = {});

// Label-preserving graph isomorphism. Exact. Intended for small graphs; the
// practical ceiling is roughly 64 vertices for regular unlabeled inputs,
// a few thousand for labeled or degree-diverse ones (refinement discretizes).
// Throws BudgetExceeded when the backtracking search outgrows the budget.
bool are_isomorphic(const LabeledGraph& g1, const LabeledGraph& g2,
                    const CanonicalOptions& opts = {});

// Stable coloring of g under iterated refinement seeded by (label, degree).
// Vertices in different classes are in different orbits of Aut(g); a discrete
// coloring proves the automorphism group is trivial.
std::vector<uint32_t> stable_coloring(const LabeledGraph& g);

}  // namespace shotgun
