#include "shotgun/jigsaw.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace shotgun {

namespace {

// directions: 0 = N, 1 = E, 2 = S, 3 = W
constexpr int kDr[4] = {-1, 0, 1, 0};
constexpr int kDc[4] = {0, 1, 0, -1};
inline uint32_t opposite(uint32_t d) { return (d + 2) & 3; }

struct Join {
    uint32_t color;
    uint32_t piece_a, dir_a;  // piece_b sits adjacent to piece_a towards dir_a
    uint32_t piece_b;
};

// union-find over pieces with relative grid offsets
struct OffsetForest {
    std::vector<uint32_t> parent;
    std::vector<std::pair<int, int>> off;  // position(i) - position(parent(i))

    explicit OffsetForest(size_t n) : parent(n), off(n, {0, 0}) {
        for (size_t i = 0; i < n; ++i) parent[i] = static_cast<uint32_t>(i);
    }
    // returns root; `delta` accumulates position(i) - position(root)
    uint32_t find(uint32_t i, std::pair<int, int>& delta) {
        if (parent[i] == i) {
            delta = {0, 0};
            return i;
        }
        std::pair<int, int> up;
        uint32_t root = find(parent[i], up);
        off[i] = {off[i].first + up.first, off[i].second + up.second};
        parent[i] = root;
        delta = off[i];
        return root;
    }
    // demand position(b) - position(a) == want; false on contradiction
    bool unite(uint32_t a, uint32_t b, std::pair<int, int> want) {
        std::pair<int, int> da, db;
        uint32_t ra = find(a, da), rb = find(b, db);
        if (ra == rb)
            return db.first - da.first == want.first && db.second - da.second == want.second;
        parent[rb] = ra;
        off[rb] = {da.first + want.first - db.first, da.second + want.second - db.second};
        return true;
    }
};

struct Clusters {
    // per root: list of (piece, relative position)
    std::map<uint32_t, std::vector<std::pair<uint32_t, std::pair<int, int>>>> groups;
};

// applies every join except `skip`; nullopt on any offset contradiction or
// overlapping cells inside a cluster
std::optional<Clusters> run_joins(const std::vector<Join>& joins, size_t n_pieces, size_t skip) {
    OffsetForest forest(n_pieces);
    for (size_t k = 0; k < joins.size(); ++k) {
        if (k == skip) continue;
        const auto& j = joins[k];
        std::pair<int, int> want{kDr[j.dir_a], kDc[j.dir_a]};
        if (!forest.unite(j.piece_a, j.piece_b, want)) return std::nullopt;
    }
    Clusters cl;
    for (uint32_t i = 0; i < n_pieces; ++i) {
        std::pair<int, int> d;
        uint32_t r = forest.find(i, d);
        cl.groups[r].push_back({i, d});
    }
    for (auto& [root, members] : cl.groups) {
        std::vector<std::pair<int, int>> cells;
        cells.reserve(members.size());
        for (auto& [p, pos] : members) cells.push_back(pos);
        std::sort(cells.begin(), cells.end());
        if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) return std::nullopt;
    }
    return cl;
}

}  // namespace

std::vector<Piece> shatter_puzzle(const Puzzle& p, Seed seed) {
    std::vector<uint32_t> positions(static_cast<size_t>(p.n) * p.n);
    for (uint32_t i = 0; i < positions.size(); ++i) positions[i] = i;
    Rng rng(seed);
    rng.shuffle(positions);
    std::vector<Piece> pieces;
    pieces.reserve(positions.size());
    for (uint32_t pos : positions) {
        uint32_t r = pos / p.n, c = pos % p.n;
        Piece piece;
        piece.jigs[0] = p.north(r, c);
        piece.jigs[1] = p.east(r, c);
        piece.jigs[2] = p.south(r, c);
        piece.jigs[3] = p.west(r, c);
        // the id records the source cell for adjudication; the solver treats
        // it as an opaque name and never decodes it
        piece.id = pos;
        pieces.push_back(piece);
    }
    return pieces;
}

AssembleResult assemble(const std::vector<Piece>& pieces, uint32_t n) {
    if (pieces.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("assemble: expected n^2 pieces");
    AssembleResult result;
    result.assembly.n = n;

    // phase 1: colors on exactly two piece sides, distinct pieces, opposite
    // directions; each such color pins one shared edge
    std::map<uint32_t, std::vector<std::pair<uint32_t, uint32_t>>> occurrences;  // color -> (piece, dir)
    for (uint32_t i = 0; i < pieces.size(); ++i)
        for (uint32_t d = 0; d < 4; ++d) occurrences[pieces[i].jigs[d]].push_back({i, d});

    std::vector<Join> joins;
    for (const auto& [color, occ] : occurrences) {
        if (occ.size() != 2) continue;
        auto [p1, d1] = occ[0];
        auto [p2, d2] = occ[1];
        if (p1 == p2 || d2 != opposite(d1)) continue;
        joins.push_back({color, p1, d1, p2});
    }

    // a color pair that is really two border slots can slip in; such a false
    // join contradicts the true ones, so retry once per excluded candidate
    auto clusters = run_joins(joins, pieces.size(), SIZE_MAX);
    if (!clusters) {
        for (size_t k = 0; k < joins.size() && !clusters; ++k)
            clusters = run_joins(joins, pieces.size(), k);
    }
    if (!clusters) {
        result.status = AssembleStatus::NoSpanningCluster;
        return result;
    }

    // largest cluster anchors the frame; ties by smallest member id
    const std::vector<std::pair<uint32_t, std::pair<int, int>>>* best = nullptr;
    for (const auto& [root, members] : clusters->groups) {
        if (!best || members.size() > best->size()) best = &members;
    }
    int min_r = INT32_MAX, max_r = INT32_MIN, min_c = INT32_MAX, max_c = INT32_MIN;
    for (const auto& [piece, pos] : *best) {
        min_r = std::min(min_r, pos.first);
        max_r = std::max(max_r, pos.first);
        min_c = std::min(min_c, pos.second);
        max_c = std::max(max_c, pos.second);
    }
    if (max_r - min_r + 1 != static_cast<int>(n) || max_c - min_c + 1 != static_cast<int>(n)) {
        result.status = AssembleStatus::NoSpanningCluster;
        return result;
    }

    constexpr uint32_t kEmpty = UINT32_MAX;
    std::vector<uint32_t> grid(static_cast<size_t>(n) * n, kEmpty);  // piece index by cell
    std::vector<bool> placed(pieces.size(), false);
    for (const auto& [piece, pos] : *best) {
        uint32_t cell = static_cast<uint32_t>(pos.first - min_r) * n +
                        static_cast<uint32_t>(pos.second - min_c);
        grid[cell] = piece;
        placed[piece] = true;
    }

    // phase 2: fill empty corners (>= 2 placed orthogonal neighbors) with the
    // unique fitting piece; a choice is never made
    auto side_color = [&](uint32_t cell, uint32_t dir) -> std::optional<uint32_t> {
        int r = static_cast<int>(cell / n) + kDr[dir];
        int c = static_cast<int>(cell % n) + kDc[dir];
        if (r < 0 || c < 0 || r >= static_cast<int>(n) || c >= static_cast<int>(n))
            return std::nullopt;
        uint32_t neighbor = grid[static_cast<uint32_t>(r) * n + static_cast<uint32_t>(c)];
        if (neighbor == kEmpty) return std::nullopt;
        return pieces[neighbor].jigs[opposite(dir)];
    };

    size_t unfilled = 0;
    for (uint32_t cell = 0; cell < grid.size(); ++cell)
        if (grid[cell] == kEmpty) ++unfilled;

    bool saw_ambiguity = false;
    while (unfilled > 0) {
        bool progress = false;
        saw_ambiguity = false;
        for (uint32_t cell = 0; cell < grid.size() && !progress; ++cell) {
            if (grid[cell] != kEmpty) continue;
            uint32_t constraints = 0;
            std::optional<uint32_t> want[4];
            for (uint32_t d = 0; d < 4; ++d) {
                want[d] = side_color(cell, d);
                if (want[d]) ++constraints;
            }
            if (constraints < 2) continue;  // not an empty corner
            uint32_t fit = kEmpty;
            bool ambiguous = false;
            for (uint32_t i = 0; i < pieces.size(); ++i) {
                if (placed[i]) continue;
                bool ok = true;
                for (uint32_t d = 0; d < 4 && ok; ++d)
                    if (want[d] && pieces[i].jigs[d] != *want[d]) ok = false;
                if (!ok) continue;
                if (fit != kEmpty) {
                    ambiguous = true;
                    break;
                }
                fit = i;
            }
            if (ambiguous) {
                saw_ambiguity = true;
                continue;
            }
            if (fit == kEmpty) continue;  // nothing fits here yet
            grid[cell] = fit;
            placed[fit] = true;
            --unfilled;
            progress = true;
        }
        if (!progress) {
            result.status =
                saw_ambiguity ? AssembleStatus::AmbiguousCorner : AssembleStatus::Stalled;
            return result;
        }
    }

    result.assembly.placement.resize(grid.size());
    for (uint32_t cell = 0; cell < grid.size(); ++cell)
        result.assembly.placement[cell] = pieces[grid[cell]].id;
    result.assembly.complete = true;
    result.status = AssembleStatus::Success;
    return result;
}

JigsawBlockingReport detect_jigsaw_blocking(const Puzzle& p, size_t max_witnesses) {
    JigsawBlockingReport report;
    const uint32_t n = p.n;
    // aligned pair at (2i, j)-(2i+1, j): signature is the six outer slots in a
    // fixed order; the connecting slot is h_edges[2i+1][j]
    struct Entry {
        uint32_t i, j, conn;
    };
    std::map<std::array<uint32_t, 6>, std::vector<Entry>> groups;
    for (uint32_t i = 0; 2 * i + 1 < n; ++i) {
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t top = 2 * i;
            std::array<uint32_t, 6> sig = {p.h_edges[top][j],     p.h_edges[top + 2][j],
                                           p.v_edges[top][j],     p.v_edges[top + 1][j],
                                           p.v_edges[top][j + 1], p.v_edges[top + 1][j + 1]};
            groups[sig].push_back({i, j, p.h_edges[top + 1][j]});
        }
    }
    for (const auto& [sig, entries] : groups) {
        std::map<uint32_t, uint64_t> by_conn;
        for (const auto& e : entries) ++by_conn[e.conn];
        uint64_t total = entries.size(), same = 0;
        for (const auto& [c, cnt] : by_conn) same += cnt * cnt;
        report.count += total * total - same;  // ordered pairs, conn differs
        for (size_t x = 0; x < entries.size(); ++x) {
            for (size_t y = x + 1; y < entries.size(); ++y) {
                if (report.witnesses.size() >= max_witnesses) break;
                if (entries[x].conn == entries[y].conn) continue;
                report.witnesses.push_back(
                    {entries[x].i, entries[x].j, entries[y].i, entries[y].j});
            }
        }
    }
    return report;
}

Puzzle apply_jigsaw_blocking_swap(const Puzzle& p, const JigsawBlockingWitness& w) {
    Puzzle out = p;
    std::swap(out.h_edges[2 * w.i + 1][w.j], out.h_edges[2 * w.i2 + 1][w.j2]);
    return out;
}

namespace {

Puzzle rotate_cw(const Puzzle& p) {
    const uint32_t n = p.n;
    Puzzle out;
    out.n = n;
    out.q = p.q;
    out.h_edges.assign(n + 1, std::vector<uint32_t>(n));
    out.v_edges.assign(n, std::vector<uint32_t>(n + 1));
    // cell (r,c) -> (c, n-1-r); a vertical slot becomes horizontal and back
    for (uint32_t r = 0; r < n; ++r)
        for (uint32_t c = 0; c <= n; ++c) out.h_edges[c][n - 1 - r] = p.v_edges[r][c];
    for (uint32_t r = 0; r <= n; ++r)
        for (uint32_t c = 0; c < n; ++c) out.v_edges[c][n - r] = p.h_edges[r][c];
    return out;
}

std::vector<std::array<uint32_t, 4>> piece_multiset(const Puzzle& p) {
    std::vector<std::array<uint32_t, 4>> out;
    out.reserve(static_cast<size_t>(p.n) * p.n);
    for (uint32_t r = 0; r < p.n; ++r)
        for (uint32_t c = 0; c < p.n; ++c)
            out.push_back({p.north(r, c), p.east(r, c), p.south(r, c), p.west(r, c)});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool verify_jigsaw_blocking(const Puzzle& p, const JigsawBlockingWitness& w) {
    Puzzle swapped = apply_jigsaw_blocking_swap(p, w);
    if (piece_multiset(p) != piece_multiset(swapped)) return false;
    // must be a genuinely different puzzle, also modulo whole-grid rotation
    if (swapped == p) return false;
    Puzzle rot = swapped;
    for (int k = 0; k < 3; ++k) {
        rot = rotate_cw(rot);
        if (rot == p) return false;
    }
    return true;
}

bool verify_assembly(const Assembly& a, const std::vector<Piece>& pieces, uint32_t n) {
    if (!a.complete) throw std::invalid_argument("verify_assembly: assembly incomplete");
    if (a.placement.size() != static_cast<size_t>(n) * n) return false;
    std::map<uint32_t, const Piece*> by_id;
    for (const auto& p : pieces) by_id[p.id] = &p;
    std::vector<const Piece*> at(a.placement.size(), nullptr);
    std::vector<bool> used_id;
    {
        std::map<uint32_t, bool> used;
        for (uint32_t cell = 0; cell < a.placement.size(); ++cell) {
            auto it = by_id.find(a.placement[cell]);
            if (it == by_id.end()) return false;
            if (used[a.placement[cell]]) return false;  // not injective
            used[a.placement[cell]] = true;
            at[cell] = it->second;
        }
    }
    for (uint32_t r = 0; r < n; ++r) {
        for (uint32_t c = 0; c < n; ++c) {
            const Piece* here = at[r * n + c];
            if (c + 1 < n && here->east() != at[r * n + c + 1]->west()) return false;
            if (r + 1 < n && here->south() != at[(r + 1) * n + c]->north()) return false;
        }
    }
    return true;
}

AssemblyMatch compare_assembly(const Assembly& a, const Puzzle& truth) {
    const uint32_t n = truth.n;
    if (!a.complete || a.placement.size() != static_cast<size_t>(n) * n)
        return AssemblyMatch::Different;
    bool exact = true;
    for (uint32_t cell = 0; cell < a.placement.size(); ++cell)
        if (a.placement[cell] != cell) exact = false;
    if (exact) return AssemblyMatch::Exact;

    // global rotations: under rotation k, the piece from cell (r,c) lands on
    // the rotated position
    auto rot_pos = [n](uint32_t r, uint32_t c) { return std::pair<uint32_t, uint32_t>{c, n - 1 - r}; };
    for (int k = 1; k <= 3; ++k) {
        bool match = true;
        for (uint32_t r = 0; r < n && match; ++r) {
            for (uint32_t c = 0; c < n && match; ++c) {
                uint32_t rr = r, cc = c;
                for (int t = 0; t < k; ++t) {
                    auto [nr, nc] = rot_pos(rr, cc);
                    rr = nr;
                    cc = nc;
                }
                match = a.placement[rr * n + cc] == r * n + c;
            }
        }
        if (match) return AssemblyMatch::RotationEquivalent;
    }
    return AssemblyMatch::Different;
}

double expected_jigsaw_blocking(uint32_t n, uint32_t q) {
    double aligned = static_cast<double>(n) * (n / 2);
    double pairs = aligned * (aligned - 1.0);
    double per = std::pow(1.0 / q, 6.0) * (1.0 - 1.0 / q);
    return pairs * per;
}

}  // namespace shotgun
