#include <doctest.h>

#include <cmath>
#include <random>

#include "sombor/invariants.hpp"
#include "sombor/qspr.hpp"

using namespace sombor;
using doctest::Approx;

TEST_CASE("acid graphs") {
  CHECK_THROWS_AS(acid_graph(1), std::invalid_argument);
  CHECK(sombor::sombor(acid_graph(2)) == Approx(9.48683).epsilon(1e-5));
  CHECK(sombor::sombor(acid_graph(3)) == Approx(12.1662).epsilon(1e-5));
  CHECK(sombor::sombor(acid_graph(20)) == Approx(60.2494).epsilon(1e-5));
  CHECK(acid_graph(5).vertex_count() == 7);

  // homologous step: adding a CH2 adds exactly 2*sqrt(2)
  for (int m = 3; m <= 19; ++m)
    CHECK(sombor::sombor(acid_graph(m + 1)) - sombor::sombor(acid_graph(m)) ==
          Approx(2 * std::sqrt(2.0)).epsilon(1e-12));

  // closed form for m >= 3
  for (int m = 3; m <= 20; ++m)
    CHECK(sombor::sombor(acid_graph(m)) ==
          Approx(std::sqrt(5.0) + (m - 3) * 2 * std::sqrt(2.0) +
                 std::sqrt(13.0) + 2 * std::sqrt(10.0))
              .epsilon(1e-12));
}

TEST_CASE("bundled dataset") {
  Dataset ds = bundled_dataset();
  REQUIRE(ds.rows.size() == 19);
  CHECK(ds.rows[0].compound == "Acetic acid");
  CHECK(ds.rows[0].dhc == Approx(875.16));
  CHECK(ds.rows[0].dhf == Approx(483.5));
  CHECK(ds.rows[0].dhsub == Approx(46.3));
  CHECK(ds.rows[0].dhvap == Approx(49.7));
  CHECK(ds.rows[0].so == Approx(9.48683));
  CHECK(ds.rows[18].compound == "Eicosanoic acid");
  CHECK(ds.rows[18].dhc == Approx(12574.2));
  CHECK(ds.rows[18].so == Approx(60.2494));

  // published SO column vs recomputation, all rows
  for (size_t i = 0; i < ds.rows.size(); ++i)
    CHECK(std::abs(sombor::sombor(acid_graph(2 + int(i))) - ds.rows[i].so) < 5e-5);
}

TEST_CASE("dataset parsing errors") {
  CHECK_THROWS(parse_dataset_csv(""));
  CHECK_THROWS(parse_dataset_csv("bad,header\n1,2\n"));
  CHECK_THROWS(parse_dataset_csv("compound,dhc,dhf,dhsub,dhvap\nx,1,2,3\n"));
  CHECK_THROWS(parse_dataset_csv(
      "compound,dhc,dhf,dhsub,dhvap,so\nAcetic acid,875.16,483.5,46.3,49.7,11.0\n"));
  // SO column optional: recomputed when absent
  Dataset ds = parse_dataset_csv(
      "compound,dhc,dhf,dhsub,dhvap\nAcetic acid,875.16,483.5,46.3,49.7\n"
      "Propanoic acid,1527.3,510.8,50.0,56.1\n");
  CHECK(ds.rows[0].so == Approx(9.48683).epsilon(1e-5));
  CHECK(ds.rows[1].so == Approx(12.1662).epsilon(1e-5));
}

TEST_CASE("ols exact line") {
  std::vector<double> x{1, 2, 3, 4, 5};
  std::vector<double> y{3, 5, 7, 9, 11};  // y = 2x + 1
  RegressionModel m = ols_fit(x, y);
  CHECK(m.slope == Approx(2.0).epsilon(1e-12));
  CHECK(m.intercept == Approx(1.0).epsilon(1e-12));
  CHECK(m.r_squared == Approx(1.0).epsilon(1e-12));
  CHECK(m.rmse == Approx(0.0));
  CHECK_THROWS_AS(ols_fit({1, 1, 1}, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ols_fit({1, 2}, {1, 2}), std::invalid_argument);
}

TEST_CASE("ols properties") {
  std::mt19937 rng(42);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<double> x, y;
  for (int i = 0; i < 25; ++i) {
    x.push_back(i * 0.7);
    y.push_back(3.5 * x.back() - 2.0 + noise(rng));
  }
  RegressionModel m = ols_fit(x, y);
  CHECK(m.r_squared >= 0.0);
  CHECK(m.r_squared <= 1.0);
  double residual_sum = 0, y_scale = 0;
  for (double r : m.residuals) residual_sum += r;
  for (double v : y) y_scale += std::abs(v);
  CHECK(std::abs(residual_sum) <= 1e-6 * y_scale);

  // refitting on predictions gives a perfect model
  std::vector<double> yhat;
  for (double v : x) yhat.push_back(m.predict(v));
  CHECK(ols_fit(x, yhat).r_squared == Approx(1.0).epsilon(1e-12));

  // shifting y shifts the intercept only
  std::vector<double> shifted;
  for (double v : y) shifted.push_back(v + 17.5);
  RegressionModel ms = ols_fit(x, shifted);
  CHECK(ms.slope == Approx(m.slope).epsilon(1e-12));
  CHECK(ms.intercept == Approx(m.intercept + 17.5).epsilon(1e-9));
}

TEST_CASE("published regression models reproduce") {
  QsprFit fit = fit_all(bundled_dataset());
  auto rel = [](double got, double expect) {
    return std::abs(got - expect) / std::abs(expect);
  };
  CHECK(rel(fit.dhc.slope, 229.7) < 5e-3);
  CHECK(rel(fit.dhc.intercept, -1263) < 5e-3);
  CHECK(rel(fit.dhf.slope, 10.65) < 5e-3);
  CHECK(rel(fit.dhf.intercept, 369.2) < 5e-3);
  CHECK(rel(fit.dhsub.slope, 1.212) < 5e-3);
  CHECK(rel(fit.dhsub.intercept, 36.41) < 5e-3);
  CHECK(rel(fit.dhvap.slope, 2.559) < 5e-3);
  CHECK(rel(fit.dhvap.intercept, 21.83) < 5e-3);

  CHECK(fit.dhc.r_squared == Approx(0.99998).epsilon(1e-4));
  CHECK(fit.dhf.r_squared == Approx(0.99737).epsilon(1e-4));
  CHECK(fit.dhsub.r_squared == Approx(0.99745).epsilon(1e-4));
  // the published table's last row carries the adjusted value
  CHECK(fit.dhvap.r_squared_adj == Approx(0.99355).epsilon(1e-4));

  CHECK(rel(fit.dhc.rmse, 17.987) < 0.01);
  CHECK(rel(fit.dhf.rmse, 8.9567) < 0.01);
  CHECK(rel(fit.dhsub.rmse, 1.0034) < 0.01);
  CHECK(rel(fit.dhvap.rmse, 3.2771) < 0.01);
}

TEST_CASE("comparison indices fit") {
  QsprFit fit = fit_all(bundled_dataset(), true);
  CHECK(fit.comparison.size() == comparison_indices().size());
  for (const auto& [name, r2s] : fit.comparison)
    for (double r2 : r2s) {
      CHECK(r2 >= 0.0);
      CHECK(r2 <= 1.0);
    }
}
