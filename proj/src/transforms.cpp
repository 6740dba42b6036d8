#include "sombor/transforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "sombor/graph6.hpp"
#include "sombor/invariants.hpp"

namespace sombor {

namespace {

std::vector<int> shortest_path(const Graph& g, int from, int to) {
  int n = g.vertex_count();
  std::vector<int> prev(n, -1);
  std::vector<int> queue{from};
  prev[from] = from;
  for (size_t i = 0; i < queue.size(); ++i) {
    int u = queue[i];
    if (u == to) break;
    for (int v : g.neighbors(u))
      if (prev[v] == -1) {
        prev[v] = u;
        queue.push_back(v);
      }
  }
  if (prev[to] == -1) return {};
  std::vector<int> pathvec;
  for (int v = to; v != from; v = prev[v]) pathvec.push_back(v);
  pathvec.push_back(from);
  std::reverse(pathvec.begin(), pathvec.end());
  return pathvec;
}

}  // namespace

SwitchSpec resolve_switch_spec(const Graph& g, const SwitchSpec& spec) {
  SwitchSpec out = spec;
  int n = g.vertex_count();
  if (out.u < 0 || out.u >= n || out.v < 0 || out.v >= n || out.u == out.v)
    throw std::invalid_argument("switch spec: invalid endpoints");
  if (g.has_edge(out.u, out.v))
    throw std::invalid_argument("switch spec: uv must be a non-edge");
  if (out.moved.empty())
    throw std::invalid_argument("switch spec: nothing to move");
  if (static_cast<int>(out.moved.size()) > g.degree(out.u))
    throw std::invalid_argument("switch spec: t exceeds d(u)");

  if (out.avoided_path.empty()) {
    out.avoided_path = shortest_path(g, out.u, out.v);
    if (out.avoided_path.empty())
      throw std::invalid_argument("switch spec: u and v are disconnected");
  } else {
    if (out.avoided_path.front() != out.u || out.avoided_path.back() != out.v)
      throw std::invalid_argument("switch spec: path must run from u to v");
    for (size_t i = 0; i + 1 < out.avoided_path.size(); ++i)
      if (!g.has_edge(out.avoided_path[i], out.avoided_path[i + 1]))
        throw std::invalid_argument("switch spec: avoided_path is not a path");
  }

  std::vector<char> on_path(n, 0);
  for (int p : out.avoided_path) on_path[p] = 1;
  std::vector<char> seen(n, 0);
  for (int m : out.moved) {
    if (m < 0 || m >= n || seen[m])
      throw std::invalid_argument("switch spec: bad or repeated moved vertex");
    seen[m] = 1;
    if (!g.has_edge(out.u, m))
      throw std::invalid_argument("switch spec: moved vertex not adjacent to u");
    if (g.has_edge(out.v, m))
      throw std::invalid_argument(
          "switch spec: moved vertex already adjacent to v");
    if (on_path[m])
      throw std::invalid_argument("switch spec: moved vertex on avoided path");
  }
  return out;
}

Graph neighbor_switch(const Graph& g, const SwitchSpec& spec) {
  SwitchSpec s = resolve_switch_spec(g, spec);
  Graph out = g;
  for (int m : s.moved) {
    out.remove_edge(s.u, m);
    out.add_edge(s.v, m);
  }
  return out;
}

EdgeAdditionReport verify_lemma23(const Graph& g) {
  EdgeAdditionReport report;
  double base = sombor(g);
  Graph work = g;
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      work.set_edge_unchecked(u, v, true);
      double margin = sombor(work) - base;
      work.set_edge_unchecked(u, v, false);
      if (report.non_edges == 0 || margin < report.min_margin) {
        report.min_margin = margin;
        report.min_edge = {u, v};
      }
      ++report.non_edges;
    }
  return report;
}

SplitComparisonReport verify_theorem25(int i, const Graph& h, int m) {
  if (i < 2 || i > m)
    throw std::invalid_argument(
        "verify_theorem25 requires 2 <= i <= (i+m)/2, i.e. 2 <= i <= m");
  SplitComparisonReport report;
  report.so_split = sombor(g_split(i, h, m));
  report.so_extreme = sombor(g_split(1, h, i + m - 1));
  report.margin = report.so_extreme - report.so_split;
  return report;
}

AlphaSwitchPair alpha_switch_pair(int hub_x_degree, int hub_y_degree) {
  if (hub_x_degree < 2 || hub_y_degree < 2)
    throw std::invalid_argument("alpha_switch_pair requires hub degrees >= 2");
  int p = hub_x_degree - 1;  // pendant 2-paths on x1
  int q = hub_y_degree - 2;  // pendant 2-paths on y1
  int n = 2 + 2 * p + 2 * q + 7;
  Graph gamma(n);
  Graph alpha(n);
  int x1 = 0, y1 = 1;
  int next = 2;
  auto pendant_2path = [&](Graph& g, int hub) {
    int a = next, b = next + 1;
    g.add_edge(hub, a);
    g.add_edge(a, b);
  };
  for (int i = 0; i < p; ++i) {
    pendant_2path(gamma, x1);
    pendant_2path(alpha, x1);
    next += 2;
  }
  for (int i = 0; i < q; ++i) {
    pendant_2path(gamma, y1);
    pendant_2path(alpha, y1);
    next += 2;
  }
  int w = next;
  int leaves = next + 1;  // six leaves: leaves..leaves+5

  gamma.add_edge(x1, y1);
  gamma.add_edge(y1, w);
  for (int i = 0; i < 6; ++i) gamma.add_edge(w, leaves + i);

  // Re-route w between the hubs; one leaf migrates to y1 so that every
  // vertex keeps its Gamma degree.
  alpha.add_edge(x1, w);
  alpha.add_edge(w, y1);
  for (int i = 0; i < 5; ++i) alpha.add_edge(w, leaves + i);
  alpha.add_edge(y1, leaves + 5);

  return {std::move(gamma), std::move(alpha)};
}

std::vector<AlphaSwitchCandidate> alpha_switch_search(int degree_min,
                                                      int degree_max) {
  if (degree_min < 2 || degree_min > degree_max)
    throw std::invalid_argument(
        "alpha_switch_search requires 2 <= degree_min <= degree_max");
  std::vector<AlphaSwitchCandidate> found;
  for (int x = degree_min; x <= degree_max; ++x)
    for (int y = degree_min; y <= degree_max; ++y) {
      AlphaSwitchPair pair = alpha_switch_pair(x, y);
      double so_gamma = sombor(pair.gamma);
      double so_alpha = sombor(pair.gamma_alpha);
      if (so_alpha > so_gamma + 1e-9)
        found.push_back({x, y, so_gamma, so_alpha, write_graph6(pair.gamma),
                         write_graph6(pair.gamma_alpha)});
    }
  return found;
}

}  // namespace sombor
