#include "sombor/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace sombor {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

/// Dense-capacity max flow (Edmonds-Karp). Node counts here are tiny
/// (at most 2n), so the adjacency matrix form is the simplest exact choice.
class DenseFlow {
 public:
  explicit DenseFlow(int nodes) : n_(nodes), cap_(nodes * nodes, 0) {}

  void reset() { std::fill(cap_.begin(), cap_.end(), 0); }
  int& cap(int u, int v) { return cap_[u * n_ + v]; }

  int max_flow(int s, int t) {
    residual_ = cap_;
    int flow = 0;
    while (true) {
      int pushed = augment(s, t);
      if (pushed == 0) break;
      flow += pushed;
    }
    return flow;
  }

  /// Nodes reachable from s in the residual network of the last max_flow.
  std::vector<char> reachable(int s) const {
    std::vector<char> seen(n_, 0);
    std::vector<int> queue{s};
    seen[s] = 1;
    for (size_t i = 0; i < queue.size(); ++i) {
      int u = queue[i];
      for (int v = 0; v < n_; ++v)
        if (!seen[v] && residual_[u * n_ + v] > 0) {
          seen[v] = 1;
          queue.push_back(v);
        }
    }
    return seen;
  }

 private:
  int augment(int s, int t) {
    std::vector<int> prev(n_, -1);
    std::vector<int> queue{s};
    prev[s] = s;
    for (size_t i = 0; i < queue.size() && prev[t] == -1; ++i) {
      int u = queue[i];
      for (int v = 0; v < n_; ++v)
        if (prev[v] == -1 && residual_[u * n_ + v] > 0) {
          prev[v] = u;
          queue.push_back(v);
        }
    }
    if (prev[t] == -1) return 0;
    int bottleneck = kInf;
    for (int v = t; v != s; v = prev[v])
      bottleneck = std::min(bottleneck, residual_[prev[v] * n_ + v]);
    for (int v = t; v != s; v = prev[v]) {
      residual_[prev[v] * n_ + v] -= bottleneck;
      residual_[v * n_ + prev[v]] += bottleneck;
    }
    return bottleneck;
  }

  int n_;
  std::vector<int> cap_;
  std::vector<int> residual_;
};

bool is_complete_graph(const Graph& g) {
  int n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

CutCertificate disconnected_certificate(const Graph& g,
                                        CutCertificate::Kind kind) {
  CutCertificate cert;
  cert.kind = kind;
  int n = g.vertex_count();
  // Any vertex outside component of 0 works as the separated partner.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  cert.separated.first = 0;
  for (int v = 1; v < n; ++v)
    if (!seen[v]) {
      cert.separated.second = v;
      break;
    }
  return cert;
}

/// Fill the vertex-split network for one (s,t) pair: node 2v is v's
/// entry, 2v+1 its exit; interior vertices get a unit entry->exit arc.
void build_split_network(const Graph& g, int s, int t, DenseFlow& flow) {
  flow.reset();
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    flow.cap(2 * v, 2 * v + 1) = (v == s || v == t) ? kInf : 1;
  for (auto [u, v] : g.edges()) {
    flow.cap(2 * u + 1, 2 * v) = kInf;
    flow.cap(2 * v + 1, 2 * u) = kInf;
  }
}

}  // namespace

ConnectivityResult vertex_connectivity(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return {0, CutCertificate{CutCertificate::Kind::vertex}};
  if (!is_connected(g))
    return {0, disconnected_certificate(g, CutCertificate::Kind::vertex)};
  if (is_complete_graph(g)) return {n - 1, std::nullopt};

  // Every minimum cut separates some non-adjacent pair, so the minimum
  // of the pairwise Menger values over non-adjacent (s, t) is exact.
  DenseFlow flow(2 * n);
  int best = kInf;
  int best_s = -1, best_t = -1;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      build_split_network(g, s, t, flow);
      int f = flow.max_flow(2 * s + 1, 2 * t);
      if (f < best) {
        best = f;
        best_s = s;
        best_t = t;
      }
    }
  }

  CutCertificate cert;
  cert.kind = CutCertificate::Kind::vertex;
  cert.separated = {best_s, best_t};
  build_split_network(g, best_s, best_t, flow);
  flow.max_flow(2 * best_s + 1, 2 * best_t);
  auto reach = flow.reachable(2 * best_s + 1);
  for (int v = 0; v < n; ++v)
    if (v != best_s && v != best_t && reach[2 * v] && !reach[2 * v + 1])
      cert.vertices.push_back(v);
  return {best, cert};
}

ConnectivityResult edge_connectivity(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return {0, CutCertificate{CutCertificate::Kind::edge}};
  if (!is_connected(g))
    return {0, disconnected_certificate(g, CutCertificate::Kind::edge)};
  if (n == 1) return {0, CutCertificate{CutCertificate::Kind::edge}};

  DenseFlow flow(n);
  auto load = [&] {
    flow.reset();
    for (auto [u, v] : g.edges()) {
      flow.cap(u, v) = 1;
      flow.cap(v, u) = 1;
    }
  };
  int best = kInf, best_t = -1;
  for (int t = 1; t < n; ++t) {
    load();
    int f = flow.max_flow(0, t);
    if (f < best) {
      best = f;
      best_t = t;
    }
  }
  CutCertificate cert;
  cert.kind = CutCertificate::Kind::edge;
  cert.separated = {0, best_t};
  load();
  flow.max_flow(0, best_t);
  auto reach = flow.reachable(0);
  for (auto [u, v] : g.edges())
    if (reach[u] != reach[v]) cert.edges.emplace_back(u, v);
  return {best, cert};
}

int brute_force_kappa(const Graph& g) {
  int n = g.vertex_count();
  if (n > 12) throw std::invalid_argument("brute_force_kappa guarded to n <= 12");
  if (n == 0) return 0;
  if (!is_connected(g)) return 0;
  if (is_complete_graph(g)) return n - 1;

  auto disconnected_without = [&](uint32_t removed) {
    int start = -1, remaining = 0;
    for (int v = 0; v < n; ++v)
      if (!((removed >> v) & 1)) {
        if (start < 0) start = v;
        ++remaining;
      }
    if (remaining <= 1) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int visited = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u))
        if (!seen[v] && !((removed >> v) & 1)) {
          seen[v] = 1;
          ++visited;
          stack.push_back(v);
        }
    }
    return visited < remaining;
  };

  int best = n - 1;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size >= best) continue;
    if (disconnected_without(mask)) best = size;
  }
  return best;
}

int brute_force_kappa_prime(const Graph& g) {
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  if (m > 20)
    throw std::invalid_argument("brute_force_kappa_prime guarded to |E| <= 20");
  if (g.vertex_count() <= 1) return 0;
  if (!is_connected(g)) return 0;

  int best = m;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    int size = std::popcount(mask);
    if (size >= best) continue;
    Graph h = g;
    for (int e = 0; e < m; ++e)
      if ((mask >> e) & 1) h.remove_edge(edges[e].first, edges[e].second);
    if (!is_connected(h)) best = size;
  }
  return best;
}

bool in_class_v(const Graph& g, int k) {
  if (k < 1 || k > g.vertex_count() - 1)
    throw std::invalid_argument("in_class_v requires 1 <= k <= n-1");
  return vertex_connectivity(g).value <= k;
}

bool in_class_e(const Graph& g, int k) {
  if (k < 1 || k > g.vertex_count() - 1)
    throw std::invalid_argument("in_class_e requires 1 <= k <= n-1");
  return edge_connectivity(g).value <= k;
}

}  // namespace sombor
