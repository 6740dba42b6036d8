#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// Hydrogen-suppressed skeleton of the monocarboxylic acid with m carbons,
/// CH3(CH2)_{m-2}COOH: a path of m carbons with two oxygen leaves on the
/// acid carbon. Vertices: carbons 0..m-1 (acid carbon m-1), oxygens m, m+1.
Graph acid_graph(int m);

struct DatasetRow {
  std::string compound;
  double dhc = 0;    // enthalpy of combustion, kJ/mol
  double dhf = 0;    // enthalpy of formation of liquid, kJ/mol
  double dhsub = 0;  // enthalpy of sublimation, kJ/mol
  double dhvap = 0;  // enthalpy of vaporization, kJ/mol
  double so = 0;     // Sombor index of the molecular skeleton
};

struct Dataset {
  std::vector<DatasetRow> rows;
};

/// CSV with header "compound,dhc,dhf,dhsub,dhvap[,so]". When the so
/// column is absent it is recomputed from acid_graph by row position
/// (first row = 2 carbons); when present it must agree with the
/// recomputed value to 1e-4 or the row is rejected as a data error.
Dataset parse_dataset_csv(const std::string& text);
Dataset load_dataset(const std::string& path);

/// The 19 monocarboxylic acids (acetic through eicosanoic) with their
/// published property values, shipped as an embedded CSV.
Dataset bundled_dataset();
const std::string& bundled_dataset_csv();

struct RegressionModel {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;      // 1 - SS_res/SS_tot
  double r_squared_adj = 0;  // 1 - (1-R^2)(n-1)/(n-2)
  double rmse = 0;           // sqrt(SS_res/(n-2)); the convention that
                             // reproduces the published table
  double rmse_population = 0;  // sqrt(SS_res/n)
  std::vector<double> residuals;

  double predict(double x) const { return slope * x + intercept; }
};

/// Closed-form simple least squares. Requires |x| == |y| >= 3 and
/// non-constant x.
RegressionModel ols_fit(const std::vector<double>& x,
                        const std::vector<double>& y);

struct QsprFit {
  RegressionModel dhc, dhf, dhsub, dhvap;
  /// index name -> R^2 against (dhc, dhf, dhsub, dhvap); our own
  /// comparison extension, not a reproduction.
  std::vector<std::pair<std::string, std::array<double, 4>>> comparison;
};

QsprFit fit_all(const Dataset& ds, bool with_comparison = false);

}  // namespace sombor
