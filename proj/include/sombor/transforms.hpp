#pragma once

#include <string>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// Edge rewiring that moves t edges from u to v: delete uu_i, add vu_i
/// for each moved neighbor u_i. Valid when uv is a non-edge, every moved
/// vertex is a neighbor of u but not of v, and no moved vertex lies on
/// the protected u-v path.
struct SwitchSpec {
  int u = -1;
  int v = -1;
  std::vector<int> moved;
  /// u-v path whose vertices must not be moved. Empty means "pick a
  /// shortest u-v path"; the source statement does not say which path.
  std::vector<int> avoided_path;
};

/// Apply the switch. d(u) drops by |moved|, d(v) rises by |moved|,
/// every other degree is unchanged. Throws on an invalid spec.
Graph neighbor_switch(const Graph& g, const SwitchSpec& spec);

/// Validate a spec against g, resolving an empty avoided_path to a
/// shortest path. Throws std::invalid_argument with the reason.
SwitchSpec resolve_switch_spec(const Graph& g, const SwitchSpec& spec);

/// Check that adding any single non-edge strictly increases the Sombor
/// index, reporting the smallest margin seen.
struct EdgeAdditionReport {
  int non_edges = 0;
  double min_margin = 0.0;       // meaningful when non_edges > 0
  std::pair<int, int> min_edge{-1, -1};
  bool all_positive(double eps = 1e-9) const {
    return non_edges == 0 || min_margin > eps;
  }
};
EdgeAdditionReport verify_lemma23(const Graph& g);

/// Compare SO(K_i v H v K_m) against SO(K_1 v H v K_{i+m-1}) for
/// 2 <= i <= (i+m)/2; the first is strictly smaller.
struct SplitComparisonReport {
  double so_split = 0.0;     // SO(G(i, m))
  double so_extreme = 0.0;   // SO(G(1, i+m-1))
  double margin = 0.0;       // so_extreme - so_split, expected > 0
};
SplitComparisonReport verify_theorem25(int i, const Graph& h, int m);

/// One (Gamma, Gamma_alpha) pair where the rewiring *increases* the
/// Sombor index, refuting the claim that the switch always decreases it.
struct AlphaSwitchCandidate {
  int hub_x_degree = 0;
  int hub_y_degree = 0;
  double so_gamma = 0.0;
  double so_gamma_alpha = 0.0;
  std::string gamma_g6;
  std::string gamma_alpha_g6;
};

/// The two-hub search family. Gamma: hubs x1, y1 adjacent, with pendant
/// 2-paths bringing them to the prescribed degrees, plus an auxiliary
/// degree-7 vertex w carrying six leaves attached to y1. Gamma_alpha
/// re-routes w to bridge the hubs (x1-w-y1 replaces the hub edge) and
/// moves one of w's leaves to y1; all degrees are preserved. The Sombor
/// difference reduces to
///   sqrt(x^2+49) + sqrt(y^2+1) - sqrt(x^2+y^2) - sqrt(50),
/// which first turns positive when a hub reaches degree 8.
struct AlphaSwitchPair {
  Graph gamma;
  Graph gamma_alpha;
};
AlphaSwitchPair alpha_switch_pair(int hub_x_degree, int hub_y_degree);

/// Scan hub degrees in [degree_min, degree_max]^2 and return every pair
/// with SO(Gamma_alpha) > SO(Gamma). Empty at small degree bounds.
std::vector<AlphaSwitchCandidate> alpha_switch_search(int degree_min,
                                                      int degree_max);

}  // namespace sombor
