#include "shotgun/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace shotgun {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::invalid_argument("parse error: " + what);
}

std::string next_nonempty_line(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    parse_fail("unexpected end of input");
}

}  // namespace

void write_graph(std::ostream& os, const LabeledGraph& g) {
    os << g.num_vertices() << ' ' << g.alphabet_size();
    if (g.geometry()) os << " lattice " << g.geometry()->side << ' ' << g.geometry()->dim;
    os << '\n';
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        os << g.label(v) << (v + 1 == g.num_vertices() ? '\n' : ' ');
    if (g.num_vertices() == 0) os << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

LabeledGraph read_graph(std::istream& is) {
    std::istringstream header(next_nonempty_line(is));
    uint64_t n;
    uint32_t q;
    if (!(header >> n >> q)) parse_fail("graph header: expected 'N q'");
    std::string ext;
    LabeledGraph g(static_cast<uint32_t>(n), q);
    if (header >> ext) {
        if (ext != "lattice") parse_fail("graph header: unknown extension '" + ext + "'");
        LatticeGeometry geo;
        if (!(header >> geo.side >> geo.dim)) parse_fail("graph header: lattice n d");
        g.set_geometry(geo);
    }
    {
        std::istringstream labels(next_nonempty_line(is));
        for (uint64_t v = 0; v < n; ++v) {
            uint32_t l;
            if (!(labels >> l)) parse_fail("label line too short");
            if (l >= q) parse_fail("label out of range");
            g.set_label(static_cast<VertexId>(v), static_cast<Label>(l));
        }
    }
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream es(line);
        uint64_t u, v;
        if (!(es >> u >> v)) parse_fail("edge line: expected 'u v'");
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    g.validate();
    return g;
}

void write_puzzle(std::ostream& os, const Puzzle& p) {
    os << "puzzle " << p.n << ' ' << p.q << '\n';
    for (const auto& row : p.h_edges) {
        for (size_t i = 0; i < row.size(); ++i) os << row[i] << (i + 1 == row.size() ? '\n' : ' ');
    }
    for (const auto& row : p.v_edges) {
        for (size_t i = 0; i < row.size(); ++i) os << row[i] << (i + 1 == row.size() ? '\n' : ' ');
    }
}

Puzzle read_puzzle(std::istream& is) {
    std::istringstream header(next_nonempty_line(is));
    std::string magic;
    Puzzle p;
    if (!(header >> magic >> p.n >> p.q) || magic != "puzzle")
        parse_fail("puzzle header: expected 'puzzle n q'");
    p.h_edges.assign(p.n + 1, std::vector<uint32_t>(p.n));
    p.v_edges.assign(p.n, std::vector<uint32_t>(p.n + 1));
    for (auto& row : p.h_edges) {
        std::istringstream rs(next_nonempty_line(is));
        for (auto& c : row)
            if (!(rs >> c) || c >= p.q) parse_fail("puzzle horizontal row");
    }
    for (auto& row : p.v_edges) {
        std::istringstream rs(next_nonempty_line(is));
        for (auto& c : row)
            if (!(rs >> c) || c >= p.q) parse_fail("puzzle vertical row");
    }
    return p;
}

void write_neighborhoods(std::ostream& os, const NeighborhoodMultiset& ms) {
    os << "neighborhoods " << ms.size() << ' ' << ms.radius << ' '
       << (ms.mode == ShatterMode::Rooted ? "rooted" : "box") << '\n';
    if (ms.mode == ShatterMode::Rooted) {
        for (const auto& nb : ms.rooted) {
            os << "nbhd " << nb.graph.num_vertices() << ' ' << nb.center << ' '
               << nb.graph.alphabet_size() << ' ' << nb.graph.num_edges() << '\n';
            for (VertexId v = 0; v < nb.graph.num_vertices(); ++v)
                os << nb.graph.label(v) << (v + 1 == nb.graph.num_vertices() ? '\n' : ' ');
            for (auto [u, v] : nb.graph.edges()) os << u << ' ' << v << '\n';
        }
    } else {
        for (const auto& b : ms.boxes) {
            os << "box " << b.side << ' ' << b.anchor.size();
            for (uint32_t a : b.anchor) os << ' ' << a;
            os << '\n';
            for (size_t i = 0; i < b.labels.size(); ++i)
                os << b.labels[i] << (i + 1 == b.labels.size() ? '\n' : ' ');
        }
    }
}

NeighborhoodMultiset read_neighborhoods(std::istream& is) {
    std::istringstream header(next_nonempty_line(is));
    std::string magic, mode;
    size_t count;
    NeighborhoodMultiset ms;
    if (!(header >> magic >> count >> ms.radius >> mode) || magic != "neighborhoods")
        parse_fail("neighborhoods header");
    ms.mode = mode == "rooted" ? ShatterMode::Rooted : ShatterMode::LatticeBox;
    for (size_t k = 0; k < count; ++k) {
        std::istringstream bh(next_nonempty_line(is));
        std::string tag;
        if (ms.mode == ShatterMode::Rooted) {
            uint32_t n, center, q;
            uint64_t edges;
            if (!(bh >> tag >> n >> center >> q >> edges) || tag != "nbhd")
                parse_fail("nbhd block header");
            RootedNeighborhood nb;
            nb.graph = LabeledGraph(n, q);
            nb.center = center;
            nb.radius = ms.radius;
            std::istringstream labels(next_nonempty_line(is));
            for (uint32_t v = 0; v < n; ++v) {
                uint32_t l;
                if (!(labels >> l)) parse_fail("nbhd label line");
                nb.graph.set_label(v, static_cast<Label>(l));
            }
            for (uint64_t e = 0; e < edges; ++e) {
                std::istringstream es(next_nonempty_line(is));
                uint32_t u, v;
                if (!(es >> u >> v)) parse_fail("nbhd edge line");
                nb.graph.add_edge(u, v);
            }
            ms.rooted.push_back(std::move(nb));
        } else {
            uint32_t side;
            size_t dims;
            if (!(bh >> tag >> side >> dims) || tag != "box") parse_fail("box block header");
            LatticeBox b;
            b.side = side;
            b.anchor.resize(dims);
            for (auto& a : b.anchor)
                if (!(bh >> a)) parse_fail("box anchor");
            uint64_t cells = 1;
            for (size_t i = 0; i < dims; ++i) cells *= side;
            std::istringstream labels(next_nonempty_line(is));
            b.labels.resize(cells);
            for (auto& l : b.labels) {
                uint32_t x;
                if (!(labels >> x)) parse_fail("box label line");
                l = static_cast<Label>(x);
            }
            ms.boxes.push_back(std::move(b));
        }
    }
    return ms;
}

void write_witness(std::ostream& os, const BlockingWitness& w) {
    os << "witness " << witness_kind_name(w.kind) << ' ' << w.radius << ' ' << w.a.size();
    for (VertexId v : w.a) os << ' ' << v;
    os << ' ' << w.b.size();
    for (VertexId v : w.b) os << ' ' << v;
    os << '\n';
}

BlockingWitness read_witness(const std::string& line) {
    std::istringstream is(line);
    std::string magic, kind;
    BlockingWitness w;
    size_t na, nb;
    if (!(is >> magic >> kind >> w.radius >> na) || magic != "witness")
        parse_fail("witness line");
    auto k = witness_kind_from_name(kind);
    if (!k) parse_fail("unknown witness kind '" + kind + "'");
    w.kind = *k;
    w.a.resize(na);
    for (auto& v : w.a)
        if (!(is >> v)) parse_fail("witness sites");
    if (!(is >> nb)) parse_fail("witness sites");
    w.b.resize(nb);
    for (auto& v : w.b)
        if (!(is >> v)) parse_fail("witness sites");
    return w;
}

const char* verdict_status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::IdentifiableCertified: return "identifiable-certified";
        case VerdictStatus::NonIdentifiableCertified: return "non-identifiable-certified";
        case VerdictStatus::Undetermined: return "undetermined";
    }
    return "unknown";
}

void write_verdict(std::ostream& os, const Verdict& v) {
    os << "verdict " << verdict_status_name(v.status) << ' ' << v.certificate << '\n';
    if (v.witness) write_witness(os, *v.witness);
}

void write_assembly(std::ostream& os, const Assembly& a, const std::string& verdict) {
    os << "assembly " << a.n << '\n';
    for (uint32_t r = 0; r < a.n; ++r)
        for (uint32_t c = 0; c < a.n; ++c) os << r << ' ' << c << ' ' << a.placement[r * a.n + c] << '\n';
    os << "verdict " << verdict << '\n';
}

}  // namespace shotgun
