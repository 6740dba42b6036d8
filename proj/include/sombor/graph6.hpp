#pragma once

#include <stdexcept>
#include <string>

#include "sombor/graph.hpp"

namespace sombor {

/// Malformed graph6 input; `offset` is the byte position of the problem.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) +
                           ")"),
        offset(offset) {}
  size_t offset;
};

/// Decode a graph6 string (short form for n <= 62, the 4-byte long form
/// above that). Upper triangle, column-major, 6-bit chunks offset by 63.
Graph parse_graph6(const std::string& text);

/// Canonical graph6 encoding; parse_graph6(write_graph6(g)) == g.
std::string write_graph6(const Graph& g);

/// Edge-list CSV: one "u,v" pair per line, optional "u,v" header.
/// Vertex count is max index + 1 unless `n` is given.
Graph parse_edge_csv(const std::string& text, int n = -1);
std::string write_edge_csv(const Graph& g);

}  // namespace sombor
