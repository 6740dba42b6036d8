#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sombor {

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bitset row per vertex (row-major flat array),
/// so edge queries are O(n/64) and neighbor scans run a word at a time.
/// No self-loops, no multi-edges. Instances are cheap to copy and are
/// treated as immutable once built; mutating helpers return new graphs.
class Graph {
 public:
  Graph() = default;

  /// n isolated vertices.
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return test(u, v);
  }

  int degree(int v) const;

  /// Neighbors of v in increasing order.
  std::vector<int> neighbors(int v) const;

  /// All edges (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// In-place edge toggles without precondition checks; used by the
  /// enumeration hot path. The caller guarantees validity.
  void set_edge_unchecked(int u, int v, bool present);

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex index " + std::to_string(v) +
                              " out of range [0," + std::to_string(n_) + ")");
  }
  bool test(int u, int v) const {
    return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1u;
  }

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;                // 64-bit words per adjacency row
  std::vector<uint64_t> bits_;   // n_ * words_, row-major
};

// -- named families ---------------------------------------------------------

Graph empty_graph(int n);
Graph path(int n);    // edges (i, i+1)
Graph star(int n);    // center 0
Graph cycle(int n);   // n >= 3
Graph complete(int n);

// -- compositions -----------------------------------------------------------

/// G2's vertices are re-indexed by +|V(G1)|; no cross edges.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// disjoint_union plus all |V(G1)|*|V(G2)| cross edges.
Graph join(const Graph& g1, const Graph& g2);

/// K_k joined to (K_1 + K_{n-k-1}): the unique Sombor maximizer among
/// graphs with connectivity at most k. Requires 1 <= k <= n-1.
/// Labels: 0..k-1 the K_k hub, k the lone vertex, k+1..n-1 the big clique.
Graph k_n_k(int n, int k);

/// H joined to (K_i + K_m). Same join reading as k_n_k;
/// g_split(1, K_k, n-k-1) == k_n_k(n, k).
Graph g_split(int i, const Graph& h, int m);

// -- reachability -----------------------------------------------------------

int component_count(const Graph& g);  // 0 for the empty graph
bool is_connected(const Graph& g);    // component_count == 1

}  // namespace sombor
