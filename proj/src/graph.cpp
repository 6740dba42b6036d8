#include "sombor/graph.hpp"

#include <bit>

namespace sombor {

Graph::Graph(int n) : n_(n), words_(n == 0 ? 0 : (n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  const uint64_t* row = &bits_[static_cast<size_t>(v) * words_];
  for (int w = 0; w < words_; ++w) d += std::popcount(row[w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  const uint64_t* row = &bits_[static_cast<size_t>(v) * words_];
  for (int w = 0; w < words_; ++w) {
    uint64_t bits = row[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (test(u, v)) throw std::invalid_argument("edge already present");
  set_edge_unchecked(u, v, true);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (!test(u, v)) throw std::invalid_argument("edge not present");
  set_edge_unchecked(u, v, false);
}

void Graph::set_edge_unchecked(int u, int v, bool present) {
  uint64_t umask = uint64_t{1} << (v & 63);
  uint64_t vmask = uint64_t{1} << (u & 63);
  uint64_t& uw = bits_[static_cast<size_t>(u) * words_ + (v >> 6)];
  uint64_t& vw = bits_[static_cast<size_t>(v) * words_ + (u >> 6)];
  if (present) {
    uw |= umask;
    vw |= vmask;
    ++m_;
  } else {
    uw &= ~umask;
    vw &= ~vmask;
    --m_;
  }
}

Graph empty_graph(int n) { return Graph(n); }

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path requires n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star(int n) {
  if (n < 1) throw std::invalid_argument("star requires n >= 1");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete requires n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  int n1 = g1.vertex_count();
  Graph g(n1 + g2.vertex_count());
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(u + n1, v + n1);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  int n1 = g1.vertex_count();
  int n2 = g2.vertex_count();
  Graph g = disjoint_union(g1, g2);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) g.add_edge(u, n1 + v);
  return g;
}

Graph k_n_k(int n, int k) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("k_n_k requires 1 <= k <= n-1");
  return g_split(1, complete(k), n - k - 1);
}

Graph g_split(int i, const Graph& h, int m) {
  if (i < 1 || m < 0 || h.vertex_count() < 1)
    throw std::invalid_argument("g_split requires i >= 1, m >= 0, |V(H)| >= 1");
  // The triple join reads as H v (K_i + K_m), not a fold of binary joins:
  // the K_i and K_m parts see only H, not each other.
  return join(h, disjoint_union(complete(i), m > 0 ? complete(m) : Graph(0)));
}

int component_count(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
  }
  return comps;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

}  // namespace sombor
