// graph6.hpp: the standard graph6 ASCII encoding of simple undirected
// graphs. The upper triangle of the adjacency matrix is read column by
// column (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), packed into 6-bit groups
// most significant bit first, each group printed as its value plus 63.
// The vertex count precedes the bits: one byte n+63 for n <= 62, or 126
// followed by three bytes for n <= 258047 (the 8-byte form beyond that is
// parsed but always over this library's bound).
#pragma once

#include <string>

#include "twofold/graph.hpp"

namespace twofold {

// Decoding bound; generous for this library's constructions (the largest
// built-in demos are under 200 vertices) while keeping accidental huge
// inputs from allocating gigabytes.
inline constexpr int kMaxGraph6Vertices = 512;

// Strict decoder: rejects bytes outside the printable range, wrong body
// length, non-zero padding bits, and n above max_n, all as
// std::invalid_argument. An optional ">>graph6<<" prefix is accepted.
Graph parse_graph6(const std::string& line, int max_n = kMaxGraph6Vertices);

std::string write_graph6(const Graph& g);

} // namespace twofold
