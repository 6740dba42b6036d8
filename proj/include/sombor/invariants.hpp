#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// Symmetric weight w(d(u), d(v)) applied per edge; the Sombor index is
/// the instance w(x, y) = sqrt(x^2 + y^2).
struct EdgeFunction {
  std::string name;
  std::function<double(double, double)> w;
};

struct EdgeTerm {
  int u, v;
  int du, dv;
  double value;
};

/// Per-edge breakdown of one degree-based index. Edges are sorted
/// lexicographically so totals are reproducible.
struct IndexReport {
  std::string index_name;
  std::vector<EdgeTerm> per_edge;
  double total = 0.0;
};

double sombor(const Graph& g);
IndexReport sombor_report(const Graph& g);
IndexReport index_with(const Graph& g, const EdgeFunction& fn);

std::string to_json(const IndexReport& report);

/// The fixed comparison set: first/second Zagreb, Randic, harmonic, ABC.
/// Our own choice of "other degree-based indices"; none of these names
/// or forms are pinned by the extremal results.
const std::vector<EdgeFunction>& comparison_indices();
EdgeFunction sombor_edge_function();

// -- closed forms ------------------------------------------------------------

/// Max Sombor value over graphs with (vertex or edge) connectivity <= k:
///   k*sqrt(k^2+(n-1)^2) + k(n-k-1)*sqrt((n-1)^2+(n-2)^2)
///   + (sqrt2/2) k(k-1)(n-1) + (sqrt2/2)(n-k-1)(n-k-2)(n-2).
double sombor_knk_closed(int n, int k);

/// SO(P_n): sqrt2 for n = 2, else 2*sqrt2*(n-3) + 2*sqrt5.
double sombor_path_closed(int n);

/// SO(S_n) = (n-1)*sqrt((n-1)^2+1). Derived from the definition; the
/// source results only use S_n as the tree maximizer, without a formula.
double sombor_star_closed(int n);

// -- scalar auxiliary functions ----------------------------------------------

/// sqrt(x^2+y^2) - sqrt((x-a)^2+y^2) for x > a >= 1, y > 0.
/// Strictly increasing in x, strictly decreasing in y.
double lemma22_f(double x, double y, double a);

/// sqrt(x^2+y^2) - sqrt(x^2+4) - sqrt(y^2+4) for x, y >= 2.
/// Strictly decreasing in each argument; the monotonicity whose misreading
/// produced the faulty switch lemma.
double sec3_f(double x, double y);

}  // namespace sombor
