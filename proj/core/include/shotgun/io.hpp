#pragma once

#include <iosfwd>
#include <string>

#include "shotgun/blocking.hpp"
#include "shotgun/graph.hpp"
#include "shotgun/jigsaw.hpp"
#include "shotgun/shatter.hpp"

namespace shotgun {

// Line-oriented text formats; exact grammars in FORMATS.md. All ids and
// labels are 0-based.

// graph:   "N q [lattice n d]" header, one label line, one "u v" line per edge
void write_graph(std::ostream& os, const LabeledGraph& g);
LabeledGraph read_graph(std::istream& is);

// puzzle:  "puzzle n q" header, n+1 rows of horizontal slots, n rows of vertical
void write_puzzle(std::ostream& os, const Puzzle& p);
Puzzle read_puzzle(std::istream& is);

// neighborhoods: "neighborhoods count r mode" header, then per entry either an
// embedded rooted graph block or a box block
void write_neighborhoods(std::ostream& os, const NeighborhoodMultiset& ms);
NeighborhoodMultiset read_neighborhoods(std::istream& is);

// witness: "witness <kind> <r> <#a> <a...> <#b> <b...>"
void write_witness(std::ostream& os, const BlockingWitness& w);
BlockingWitness read_witness(const std::string& line);

// verdict: "verdict <status> <certificate>" plus an optional witness line
void write_verdict(std::ostream& os, const Verdict& v);

// assembly: "assembly n" header, "r c piece-id" lines, "verdict <...>" footer
void write_assembly(std::ostream& os, const Assembly& a, const std::string& verdict);

const char* verdict_status_name(VerdictStatus s);

}  // namespace shotgun
