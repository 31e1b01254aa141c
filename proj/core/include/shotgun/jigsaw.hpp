#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shotgun/rng.hpp"

namespace shotgun {

// n x n grid of squares; every edge slot (interior and border) carries one of
// q colors. h_edges[r][c] is the horizontal slot above cell (r,c) for
// r in [0,n], c in [0,n); v_edges[r][c] is the vertical slot left of cell
// (r,c) for r in [0,n), c in [0,n]. Total slots: 2n(n+1).
struct Puzzle {
    uint32_t n = 0;
    uint32_t q = 1;
    std::vector<std::vector<uint32_t>> h_edges;  // (n+1) x n
    std::vector<std::vector<uint32_t>> v_edges;  // n x (n+1)

    uint32_t north(uint32_t r, uint32_t c) const { return h_edges[r][c]; }
    uint32_t south(uint32_t r, uint32_t c) const { return h_edges[r + 1][c]; }
    uint32_t west(uint32_t r, uint32_t c) const { return v_edges[r][c]; }
    uint32_t east(uint32_t r, uint32_t c) const { return v_edges[r][c + 1]; }

    uint64_t num_slots() const { return 2ull * n * (n + 1); }
    bool operator==(const Puzzle&) const = default;
};

// A piece keeps its absolute orientation: jigs are the (N, E, S, W) colors.
// `id` is an opaque identity, not a position.
struct Piece {
    uint32_t jigs[4];  // N, E, S, W
    uint32_t id = 0;

    uint32_t north() const { return jigs[0]; }
    uint32_t east() const { return jigs[1]; }
    uint32_t south() const { return jigs[2]; }
    uint32_t west() const { return jigs[3]; }
};

// placement[r*n + c] = piece id at cell (r,c).
struct Assembly {
    uint32_t n = 0;
    std::vector<uint32_t> placement;
    bool complete = false;
};

enum class AssembleStatus {
    Success,
    NoSpanningCluster,  // phase-1 clusters never anchor the full frame
    AmbiguousCorner,    // two distinct pieces fit an empty corner; never guessed
    Stalled,            // unfilled cells remain but no empty corner is forced
};

struct AssembleResult {
    AssembleStatus status = AssembleStatus::Success;
    Assembly assembly;
};

enum class AssemblyMatch { Exact, RotationEquivalent, Different };

// All n^2 pieces in seed-shuffled order, position information erased.
std::vector<Piece> shatter_puzzle(const Puzzle& p, Seed seed);

// Two-phase assembly: join piece sides whose color occurs on exactly two
// piece sides globally, in geometrically compatible (opposite) directions;
// anchor the cluster spanning the n x n frame; then repeatedly fill empty
// corners with the unique fitting piece. Ambiguity is a failure, never a guess.
AssembleResult assemble(const std::vector<Piece>& pieces, uint32_t n);

// An aligned pair sits at rows (2i, 2i+1) of one column. The blocking count
// is over ordered pairs of distinct aligned pairs whose seven edge slots
// match under translation except the connecting edge, which must differ.
struct JigsawBlockingWitness {
    uint32_t i, j;    // first aligned pair: cells (2i, j), (2i+1, j)
    uint32_t i2, j2;  // second aligned pair
};
struct JigsawBlockingReport {
    uint64_t count = 0;  // ordered pairs
    std::vector<JigsawBlockingWitness> witnesses;
};
JigsawBlockingReport detect_jigsaw_blocking(const Puzzle& p, size_t max_witnesses = SIZE_MAX);

// Exchanges the two aligned blocks of a witness: swaps the connecting-edge
// colors. The result has the same piece multiset but is a different puzzle.
Puzzle apply_jigsaw_blocking_swap(const Puzzle& p, const JigsawBlockingWitness& w);

// True when the witness certifies non-identifiability: the swapped puzzle has
// the same piece multiset and is not equal to the original or any of its four
// whole-grid rotations.
bool verify_jigsaw_blocking(const Puzzle& p, const JigsawBlockingWitness& w);

// placement is a bijection and all adjacent jig pairs match.
// Throws std::invalid_argument when `a` is not complete.
bool verify_assembly(const Assembly& a, const std::vector<Piece>& pieces, uint32_t n);

AssemblyMatch compare_assembly(const Assembly& a, const Puzzle& truth);

// (#ordered aligned-pair pairs) * q^-6 * (1 - 1/q)
double expected_jigsaw_blocking(uint32_t n, uint32_t q);

}  // namespace shotgun
