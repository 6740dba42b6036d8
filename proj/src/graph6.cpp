#include "sombor/graph6.hpp"

#include <sstream>

namespace sombor {

namespace {

constexpr int kMaxN = 258047;  // largest order the 4-byte header encodes

int sextet(const std::string& s, size_t i) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126) throw Graph6Error("character out of graph6 range", i);
  return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);

  size_t pos = 0;
  long long n;
  if (sextet(text, 0) == 63) {
    // ">>graph6<<" style headers are not accepted; 126 starts the long form.
    if (text.size() < 4) throw Graph6Error("truncated long-form header", text.size());
    if (sextet(text, 1) == 63)
      throw Graph6Error("graphs beyond 8-byte order encoding unsupported", 1);
    n = (static_cast<long long>(sextet(text, 1)) << 12) |
        (sextet(text, 2) << 6) | sextet(text, 3);
    pos = 4;
  } else {
    n = sextet(text, 0);
    pos = 1;
  }
  if (n > kMaxN) throw Graph6Error("order out of range", 0);

  Graph g(static_cast<int>(n));
  size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  size_t nbytes = (nbits + 5) / 6;
  if (text.size() != pos + nbytes)
    throw Graph6Error("body length mismatch: expected " +
                          std::to_string(nbytes) + " data bytes",
                      text.size());

  size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int chunk = sextet(text, pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1) g.set_edge_unchecked(u, v, true);
    }
  }
  // Padding bits must be zero.
  for (size_t b = nbits; b < nbytes * 6; ++b) {
    int chunk = sextet(text, pos + b / 6);
    if ((chunk >> (5 - b % 6)) & 1)
      throw Graph6Error("nonzero padding bit", pos + b / 6);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > kMaxN) throw std::invalid_argument("graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  int chunk = 0;
  size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (bit % 6 == 5) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
      }
    }
  }
  if (nbits % 6 != 0)
    out.push_back(static_cast<char>((chunk << (6 - nbits % 6)) + 63));
  return out;
}

Graph parse_edge_csv(const std::string& text, int n) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line == "u,v") continue;
    size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("edge CSV line " + std::to_string(lineno) +
                               ": missing comma");
    try {
      int u = std::stoi(line.substr(0, comma));
      int v = std::stoi(line.substr(comma + 1));
      if (u < 0 || v < 0 || u == v) throw std::invalid_argument("bad pair");
      edges.emplace_back(u, v);
      max_vertex = std::max({max_vertex, u, v});
    } catch (const std::exception&) {
      throw std::runtime_error("edge CSV line " + std::to_string(lineno) +
                               ": invalid edge '" + line + "'");
    }
  }
  Graph g(n >= 0 ? n : max_vertex + 1);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::string write_edge_csv(const Graph& g) {
  std::string out = "u,v\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + "," + std::to_string(v) + "\n";
  return out;
}

}  // namespace sombor
