#include "sombor/qspr.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sombor/invariants.hpp"

namespace sombor {

Graph acid_graph(int m) {
  if (m < 2) throw std::invalid_argument("acid_graph requires m >= 2 carbons");
  Graph g(m + 2);
  for (int c = 0; c + 1 < m; ++c) g.add_edge(c, c + 1);
  g.add_edge(m - 1, m);      // carbonyl oxygen
  g.add_edge(m - 1, m + 1);  // hydroxyl oxygen
  return g;
}

namespace {

const char* kBundledCsv =
    "compound,dhc,dhf,dhsub,dhvap,so\n"
    "Acetic acid,875.16,483.5,46.3,49.7,9.48683\n"
    "Propanoic acid,1527.3,510.8,50.0,56.1,12.1662\n"
    "Butanoic acid,2183.5,533.9,54.9,62.9,14.9946\n"
    "Pentanoic acid,2837.8,558.9,58.2,69.0,17.8230\n"
    "Hexanoic acid,3494.3,581.8,63.0,75.0,20.6515\n"
    "Heptanoic acid,4146.9,608.5,64.8,81.7,23.4799\n"
    "Octanoic acid,4799.9,634.8,69.4,86.9,26.3083\n"
    "Nonanoic acid,5456.1,658.0,72.3,93.6,29.1367\n"
    "Decanoic acid,6079.3,713.7,76.3,100.8,31.9652\n"
    "Undecanoic acid,6736.5,736.2,78.9,106.7,34.7936\n"
    "Dodecanoic acid,7333.0,775.1,82.2,115.9,37.6220\n"
    "Tridecanoic acid,8024.2,807.2,84.9,121.2,40.4504\n"
    "Tetradecanoic acid,8676.7,834.1,87.7,130.2,43.2789\n"
    "Pentadecanoic acid,9327.7,862.4,91.4,136.5,46.1073\n"
    "Hexadecanoic acid,9977.2,892.2,94.5,144.3,48.9357\n"
    "Heptadecanoic acid,10624.4,924.4,100.7,159.6,51.7642\n"
    "Octadecanoic acid,11280.1,947.2,102.8,164.7,54.5926\n"
    "Nonadecanoic acid,11923.4,984.1,105.0,172.9,57.4210\n"
    "Eicosanoic acid,12574.2,1012.6,109.9,179.2,60.2494\n";

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

Dataset parse_dataset_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.empty())
    throw std::runtime_error("dataset: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  bool has_so;
  if (line == "compound,dhc,dhf,dhsub,dhvap,so")
    has_so = true;
  else if (line == "compound,dhc,dhf,dhsub,dhvap")
    has_so = false;
  else
    throw std::runtime_error(
        "dataset: header must be compound,dhc,dhf,dhsub,dhvap[,so]");

  Dataset ds;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != (has_so ? 6u : 5u))
      throw std::runtime_error("dataset row " + std::to_string(lineno) +
                               ": wrong field count");
    DatasetRow row;
    row.compound = fields[0];
    try {
      row.dhc = std::stod(fields[1]);
      row.dhf = std::stod(fields[2]);
      row.dhsub = std::stod(fields[3]);
      row.dhvap = std::stod(fields[4]);
      if (has_so) row.so = std::stod(fields[5]);
    } catch (const std::exception&) {
      throw std::runtime_error("dataset row " + std::to_string(lineno) +
                               ": non-numeric field");
    }
    int carbons = 2 + static_cast<int>(ds.rows.size());
    double recomputed = sombor(acid_graph(carbons));
    if (has_so && std::abs(recomputed - row.so) > 1e-4)
      throw std::runtime_error(
          "dataset row " + std::to_string(lineno) + ": so column " +
          fields[5] + " disagrees with recomputed value " +
          std::to_string(recomputed));
    if (!has_so) row.so = recomputed;
    ds.rows.push_back(std::move(row));
  }
  if (ds.rows.empty()) throw std::runtime_error("dataset: no rows");
  return ds;
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_dataset_csv(buffer.str());
}

const std::string& bundled_dataset_csv() {
  static const std::string csv = kBundledCsv;
  return csv;
}

Dataset bundled_dataset() { return parse_dataset_csv(bundled_dataset_csv()); }

RegressionModel ols_fit(const std::vector<double>& x,
                        const std::vector<double>& y) {
  size_t n = x.size();
  if (n != y.size() || n < 3)
    throw std::invalid_argument("ols_fit requires |x| == |y| >= 3");
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, sst = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    sst += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0) throw std::invalid_argument("ols_fit: x has zero variance");

  RegressionModel model;
  model.slope = sxy / sxx;
  model.intercept = my - model.slope * mx;
  double ssr = 0;
  for (size_t i = 0; i < n; ++i) {
    double r = y[i] - model.predict(x[i]);
    model.residuals.push_back(r);
    ssr += r * r;
  }
  model.r_squared = sst > 0 ? 1.0 - ssr / sst : 1.0;
  model.r_squared_adj =
      1.0 - (1.0 - model.r_squared) * double(n - 1) / double(n - 2);
  model.rmse = std::sqrt(ssr / double(n - 2));
  model.rmse_population = std::sqrt(ssr / double(n));
  return model;
}

QsprFit fit_all(const Dataset& ds, bool with_comparison) {
  std::vector<double> so, dhc, dhf, dhsub, dhvap;
  for (const auto& r : ds.rows) {
    so.push_back(r.so);
    dhc.push_back(r.dhc);
    dhf.push_back(r.dhf);
    dhsub.push_back(r.dhsub);
    dhvap.push_back(r.dhvap);
  }
  QsprFit fit;
  fit.dhc = ols_fit(so, dhc);
  fit.dhf = ols_fit(so, dhf);
  fit.dhsub = ols_fit(so, dhsub);
  fit.dhvap = ols_fit(so, dhvap);

  if (with_comparison) {
    for (const auto& fn : comparison_indices()) {
      std::vector<double> xs;
      for (size_t i = 0; i < ds.rows.size(); ++i)
        xs.push_back(index_with(acid_graph(2 + static_cast<int>(i)), fn).total);
      fit.comparison.push_back(
          {fn.name,
           {ols_fit(xs, dhc).r_squared, ols_fit(xs, dhf).r_squared,
            ols_fit(xs, dhsub).r_squared, ols_fit(xs, dhvap).r_squared}});
    }
  }
  return fit;
}

}  // namespace sombor
