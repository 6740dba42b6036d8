#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

enum class ClassMode { vertex, edge };
enum class Objective { max, min };

/// Visit every connected labeled simple graph on n vertices exactly once,
/// in ascending edge-mask order (edges indexed lexicographically).
/// Guarded to 1 <= n <= 8.
void enumerate_connected(int n, const std::function<void(const Graph&)>& visit);

/// Adjacency-preserving bijection test: degree-sequence prefilter,
/// iterated neighbor-color refinement, then backtracking.
bool isomorphic(const Graph& g1, const Graph& g2);

struct ExtremalReport {
  int n = 0;
  int k = 0;
  ClassMode mode = ClassMode::vertex;
  Objective objective = Objective::max;
  double best_value = 0.0;
  std::vector<std::string> argbest;  // graph6, deduped up to isomorphism
  double theorem_value = 0.0;
  bool agrees = false;
};

/// Exhaustive extremal search over connected n-vertex graphs with
/// connectivity (vertex or edge) at most k. Guarded to n <= 7.
/// `threads` partitions the edge-mask space into contiguous ranges;
/// results are merged in partition order, so output is thread-count
/// independent.
ExtremalReport extremal_in_class(int n, int k, ClassMode mode,
                                 Objective objective, int threads = 1);

/// All (k, mode, objective) reports for one n from a single scan.
std::vector<ExtremalReport> extremal_scan(int n, int threads = 1);

struct TheoremCheck {
  std::string claim;
  bool pass = false;
  double margin = 0.0;  // slack by which the claim holds (min over cases)
  std::string detail;
};

struct VerifySummary {
  std::vector<TheoremCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Run every extremal and monotonicity claim at desk scale:
/// tree bounds, edge-addition growth, the split comparison sweep,
/// the rewiring inequality, and the class extrema with uniqueness.
VerifySummary verify_all_theorems(int n_max, int threads = 1);

}  // namespace sombor
