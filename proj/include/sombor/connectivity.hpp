#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// Witness for a connectivity value: removing `vertices` (or `edges`)
/// disconnects `separated.first` from `separated.second`.
struct CutCertificate {
  enum class Kind { vertex, edge };
  Kind kind;
  std::vector<int> vertices;                 // vertex cuts
  std::vector<std::pair<int, int>> edges;    // edge cuts, u < v
  std::pair<int, int> separated{-1, -1};
};

struct ConnectivityResult {
  int value = 0;
  /// Absent exactly for complete graphs in the vertex case, where
  /// kappa = n-1 by definition and no cut exists.
  std::optional<CutCertificate> cut;
};

/// Exact vertex connectivity via Menger: minimum over non-adjacent pairs
/// (s,t) of the max number of internally vertex-disjoint s-t paths,
/// computed as unit-capacity flow on the vertex-split network.
/// kappa(K_n) = n-1; disconnected input gives 0 with an empty cut.
ConnectivityResult vertex_connectivity(const Graph& g);

/// Exact edge connectivity: minimum s-t edge flow over all t for fixed s.
ConnectivityResult edge_connectivity(const Graph& g);

/// Subset-enumeration oracles, guarded to desk scale
/// (n <= 12 vertices / |E| <= 20 edges).
int brute_force_kappa(const Graph& g);
int brute_force_kappa_prime(const Graph& g);

/// Membership in the class of n-vertex graphs with kappa <= k
/// (resp. kappa' <= k). Requires 1 <= k <= n-1.
bool in_class_v(const Graph& g, int k);
bool in_class_e(const Graph& g, int k);

}  // namespace sombor
