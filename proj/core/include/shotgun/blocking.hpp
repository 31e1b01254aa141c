#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shotgun/canonical.hpp"
#include "shotgun/graph.hpp"
#include "shotgun/shatter.hpp"

namespace shotgun {

// A blocking configuration: local structure whose switch produces a second,
// non-isomorphic graph with the same radius-r observations.
enum class WitnessKind {
    GeneralSwitch,    // vertex pair (v,w): matching shells, far apart, detachables swap
    LatticePair,      // two anchored boxes equal except their center labels
    ProngedLinePair,  // bare line component + pronged line component
    LabeledLinePair,  // two isolated lines, equal middles, differing endpoints
    TreeCherry,       // two cherries with matching parent/child labels
};

const char* witness_kind_name(WitnessKind k);
std::optional<WitnessKind> witness_kind_from_name(const std::string& name);

struct BlockingWitness {
    WitnessKind kind = WitnessKind::GeneralSwitch;
    uint32_t radius = 0;
    // Site groups; the layout depends on the kind (see FORMATS.md):
    //   GeneralSwitch:   a = {v},  b = {w}
    //   LatticePair:     a = {center1}, b = {center2}
    //   ProngedLinePair: a = bare line in path order;
    //                    b = line in path order, then the two prongs of
    //                        b.front(), then the two prongs of b.back()
    //   LabeledLinePair: a, b = the lines in path order, oriented so the
    //                    middle label sequences match forward
    //   TreeCherry:      a = {parent, child, leaf, leaf}, b likewise
    std::vector<VertexId> a;
    std::vector<VertexId> b;

    bool operator==(const BlockingWitness&) const = default;
};

// --- detectors --------------------------------------------------------------

// Conditions: matching label-preserving shells S(.;1,2r) under a distance
// pairing, d(v,w) > 2r, and a switch that is not an automorphism. Intended
// for small graphs; the switch test uses `opts` and flags budget overruns.
struct GeneralDetectReport {
    std::vector<BlockingWitness> witnesses;
    bool budget_exceeded = false;  // some pairs undetermined
};
GeneralDetectReport detect_general_blocking(const LabeledGraph& g, uint32_t r,
                                            const CanonicalOptions& opts = {});

// Anchored side-(2r-1) box pairs (anchors on the (2r-1)-grid) whose labels
// agree except at the two centers. detect returns unordered witnesses up to
// `max_witnesses`; count is over ordered pairs, matching the analytic mean.
std::vector<BlockingWitness> detect_lattice_blocking(const LabeledGraph& g, uint32_t r,
                                                     size_t max_witnesses = SIZE_MAX);
uint64_t count_lattice_blocking(const LabeledGraph& g, uint32_t r);

// Full-component occurrences of the two-line pattern (one bare 2r+1 line,
// one 2r+1 line with two pendant prongs at each end). Count = bare * pronged.
std::vector<BlockingWitness> detect_er_blocking(const LabeledGraph& g, uint32_t r,
                                                size_t max_witnesses = SIZE_MAX);
uint64_t count_er_blocking(const LabeledGraph& g, uint32_t r);

// Pairs of isolated (2r+1)-vertex line components with equal middle label
// sequences (in some orientation) and two differing endpoint labels each.
std::vector<BlockingWitness> detect_labeled_er_blocking(const LabeledGraph& g, uint32_t r,
                                                        size_t max_witnesses = SIZE_MAX);

// Cherry pairs in the heap-ordered full binary tree (children of i are
// 2i+1, 2i+2): one chosen (left) child per next-to-last-level parent, pairs
// with equal parent labels, equal child labels, differing leaf label sets.
std::vector<BlockingWitness> detect_tree_blocking(const LabeledGraph& g,
                                                  size_t max_witnesses = SIZE_MAX);
uint64_t count_tree_blocking(const LabeledGraph& g);

// --- switch verification -----------------------------------------------------

// The switched graph prescribed by the witness kind (labels swapped, prongs
// moved, cherries exchanged...). Throws std::invalid_argument for witnesses
// that are not structurally valid on g.
LabeledGraph apply_blocking_switch(const LabeledGraph& g, const BlockingWitness& w);

struct VerifyOutcome {
    bool passed = false;
    bool budget_exceeded = false;  // isomorphism undetermined: treated as not passed
};

// A witness passes iff the switched graph generates the same radius-r
// observation multiset (canonical codes, or box arrays in lattice mode) AND
// is not isomorphic to g. Every NonIdentifiableCertified verdict rests on
// this check.
VerifyOutcome verify_blocking_switch(const LabeledGraph& g, const BlockingWitness& w, uint32_t r,
                                     const CanonicalOptions& opts = {});

// Label-preserving isomorphism restricted to lattice box symmetries
// (axis permutations x reflections); exact for lattice-geometry graphs.
bool lattice_symmetry_isomorphic(const LabeledGraph& g1, const LabeledGraph& g2);

// --- judge -------------------------------------------------------------------

enum class VerdictStatus { IdentifiableCertified, NonIdentifiableCertified, Undetermined };

struct Verdict {
    VerdictStatus status = VerdictStatus::Undetermined;
    std::optional<BlockingWitness> witness;  // stored for every non-identifiable verdict
    std::string certificate;                 // which condition fired, or why undetermined
};

struct DetectorSet {
    bool general = false;
    bool lattice = false;
    bool er_pronged_line = false;
    bool labeled_er_lines = false;
    bool tree = false;
};

struct JudgeOptions {
    CanonicalOptions canonical;
    size_t max_witness_checks = 16;  // verified per detector before giving up
    uint64_t diameter_budget = 1ull << 22;
};

class InternalContradiction : public std::logic_error {
public:
    explicit InternalContradiction(const std::string& what) : std::logic_error(what) {}
};

// One-sided certification. Identifiable routes: overlap uniqueness at r-1
// (box-array uniqueness at side r-1 plus a forced-gluing scan in lattice
// mode), or r covering the component diameter. Non-identifiable route: any
// detector witness that passes verify_blocking_switch. Both firing at once
// raises InternalContradiction; that is a test-failure condition, the
// certificates must be mutually exclusive.
Verdict judge(const LabeledGraph& g, uint32_t r, const DetectorSet& detectors,
              const JudgeOptions& opts = {});

// Lattice-mode identifiable certificate, exposed for tests: every anchored
// side-r box is forced by its already-scanned overlaps, in both scan
// directions, so the greedy shift-by-one gluing never faces a choice.
bool lattice_forced_gluing(const LabeledGraph& g, uint32_t r);

}  // namespace shotgun
