#include "sombor/invariants.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace sombor {

namespace {
constexpr double kHalfSqrt2 = 0.70710678118654752440;
}

double sombor(const Graph& g) {
  // Accumulate in sorted edge order so the floating total is reproducible.
  double total = 0.0;
  for (auto [u, v] : g.edges()) {
    double du = g.degree(u), dv = g.degree(v);
    total += std::sqrt(du * du + dv * dv);
  }
  return total;
}

IndexReport index_with(const Graph& g, const EdgeFunction& fn) {
  IndexReport report;
  report.index_name = fn.name;
  for (auto [u, v] : g.edges()) {
    int du = g.degree(u), dv = g.degree(v);
    double value = fn.w(du, dv);
    report.per_edge.push_back({u, v, du, dv, value});
    report.total += value;
  }
  return report;
}

IndexReport sombor_report(const Graph& g) {
  return index_with(g, sombor_edge_function());
}

std::string to_json(const IndexReport& report) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& t : report.per_edge)
    edges.push_back({{"u", t.u},
                     {"v", t.v},
                     {"du", t.du},
                     {"dv", t.dv},
                     {"term", t.value}});
  nlohmann::json j = {
      {"name", report.index_name}, {"total", report.total}, {"edges", edges}};
  return j.dump();
}

EdgeFunction sombor_edge_function() {
  return {"sombor",
          [](double x, double y) { return std::sqrt(x * x + y * y); }};
}

const std::vector<EdgeFunction>& comparison_indices() {
  static const std::vector<EdgeFunction> set = {
      {"first_zagreb", [](double x, double y) { return x + y; }},
      {"second_zagreb", [](double x, double y) { return x * y; }},
      {"randic", [](double x, double y) { return 1.0 / std::sqrt(x * y); }},
      {"harmonic", [](double x, double y) { return 2.0 / (x + y); }},
      {"abc",
       [](double x, double y) { return std::sqrt((x + y - 2.0) / (x * y)); }},
  };
  return set;
}

double sombor_knk_closed(int n, int k) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("sombor_knk_closed requires 1 <= k <= n-1");
  double nn = n, kk = k;
  double r = n - k - 1;  // size of the big clique part
  return kk * std::sqrt(kk * kk + (nn - 1) * (nn - 1)) +
         kk * r * std::sqrt((nn - 1) * (nn - 1) + (nn - 2) * (nn - 2)) +
         kHalfSqrt2 * kk * (kk - 1) * (nn - 1) +
         kHalfSqrt2 * r * (r - 1) * (nn - 2);
}

double sombor_path_closed(int n) {
  if (n < 2) throw std::invalid_argument("sombor_path_closed requires n >= 2");
  if (n == 2) return std::sqrt(2.0);
  return 2.0 * std::sqrt(2.0) * (n - 3) + 2.0 * std::sqrt(5.0);
}

double sombor_star_closed(int n) {
  if (n < 2) throw std::invalid_argument("sombor_star_closed requires n >= 2");
  double c = n - 1;
  return c * std::sqrt(c * c + 1.0);
}

double lemma22_f(double x, double y, double a) {
  if (!(x > a && a >= 1.0 && y > 0.0))
    throw std::domain_error("lemma22_f requires x > a >= 1, y > 0");
  return std::sqrt(x * x + y * y) - std::sqrt((x - a) * (x - a) + y * y);
}

double sec3_f(double x, double y) {
  if (!(x >= 2.0 && y >= 2.0))
    throw std::domain_error("sec3_f requires x, y >= 2");
  return std::sqrt(x * x + y * y) - std::sqrt(x * x + 4.0) -
         std::sqrt(y * y + 4.0);
}

}  // namespace sombor
