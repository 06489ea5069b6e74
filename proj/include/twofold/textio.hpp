// textio.hpp: the plain-text formats the CLI speaks.
//   edge list     "n m" header line, then m lines "u v"
//   permutation   cycle notation "(0 2)(1 3)", an image array "0 3 2 1",
//                 or the word "id"
//   arc list      space-separated "u,v" pairs
//   layered spec  line 1: layer count m; m graph6 lines; then per link
//                 either the word "auto" (link 0 only, completes the cycle)
//                 or two permutation lines (alpha, then beta); blank lines
//                 and lines starting with '#' are skipped
// All parsers throw std::invalid_argument with the offending line or token.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twofold/construction.hpp"
#include "twofold/graph.hpp"
#include "twofold/permutation.hpp"
#include "twofold/tf.hpp"

namespace twofold {

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// n fixes the domain size (cycle notation and "id" do not carry one).
Permutation parse_permutation(const std::string& text, int n);

std::vector<Arc> parse_arcs(const std::string& text);

LayeredSpec parse_layered_spec(std::istream& in);

} // namespace twofold
