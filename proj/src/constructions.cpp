#include "lincomb/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lincomb/errors.hpp"
#include "lincomb/graph_io.hpp"
#include "lincomb/spectrum.hpp"

namespace lincomb {

namespace {

const double kSqrt329 = std::sqrt(329.0);

}  // namespace

GernertParams::GernertParams(std::size_t k_, std::size_t n_) : k(k_), n(n_) {
  if (k < 1) throw std::invalid_argument("Gernert family needs k >= 1");
  if (n < 21 * k) {
    throw std::invalid_argument("Gernert family needs n >= 21k (k = " + std::to_string(k) + ", n = " +
                                std::to_string(n) + ")");
  }
}

GernertParams GernertParams::for_order(std::size_t n) {
  if (n < 21) throw std::invalid_argument("Gernert family needs n >= 21");
  return GernertParams(n / 21, n);
}

Graph gernert_graph(const GernertParams& p) {
  const Graph core = join(complete(5 * p.k), disjoint_union(complete(8 * p.k), complete(8 * p.k)));
  return add_isolated(core, p.n - p.core());
}

double gernert_quotient_root(std::size_t k) {
  const double kd = static_cast<double>(k);
  return (13.0 * kd - 2.0 + kd * kSqrt329) / 2.0;
}

double gernert_predicted_value(std::size_t k) {
  const double kd = static_cast<double>(k);
  return (29.0 * kd - 4.0 + kd * kSqrt329) / 2.0;
}

double gernert_quadratic(std::size_t k, double x) {
  const double kd = static_cast<double>(k);
  return (x - 5.0 * kd + 1.0) * (x - 8.0 * kd + 1.0) - 80.0 * kd * kd;
}

double gernert_rate() { return (29.0 + kSqrt329) / 42.0; }

double lower_bound(std::size_t n) { return gernert_rate() * static_cast<double>(n) - 25.0; }

double upper_bound(std::size_t n) { return 2.0 * static_cast<double>(n) / std::sqrt(3.0); }

GernertCertificate gernert_certificate(const GernertParams& p, std::size_t budget) {
  if (p.n > budget) {
    throw BudgetExceeded("Gernert certificate of order " + std::to_string(p.n) + " exceeds solver budget " +
                         std::to_string(budget));
  }
  const Graph g = gernert_graph(p);
  const Spectrum s = eigenvalues(g);

  GernertCertificate c;
  c.params = p;
  c.mu1 = s.mu(1);
  c.mu2 = s.mu(2);
  c.value = c.mu1 + c.mu2;
  c.predicted = gernert_predicted_value(p.k);
  c.lower = lower_bound(p.n);
  c.upper = upper_bound(p.n);
  c.sound = spectrum_sound(s, g.edge_count());
  c.witness_graph6 = to_graph6(g);

  const double slack = std::max(2.0 * s.tol(), kMinInequalitySlack);
  const double second = 8.0 * static_cast<double>(p.k) - 1.0;
  c.mu2_equals_bound = std::fabs(c.mu2 - second) <= slack;

  CheckReport& r = c.report;
  r.name = "gernert_certificate";
  r.subject = "k=" + std::to_string(p.k) + " n=" + std::to_string(p.n);
  r.numerical_slack = slack;
  auto add = [&](std::string label, std::size_t index, double lhs, double rhs, bool strict) {
    r.details.push_back({std::move(label), index, lhs, rhs, rhs - lhs, strict});
  };
  add("closed_form", 1, c.predicted, c.value, false);
  add("second_eigenvalue", 2, second, c.mu2, false);
  add("exceeds_order", 3, static_cast<double>(p.core()), c.value, true);
  add("exceeds_lower_bound", 4, c.lower, c.value, true);
  add("upper_bound", 5, c.value, c.upper, false);
  r.margin = r.details.front().slack;
  for (const auto& d : r.details) r.margin = std::min(r.margin, d.slack);
  // The counterexample property is asserted strictly, without the allowance.
  const bool strict_ok = r.details[2].slack > 0.0 && r.details[3].slack > 0.0;
  r.passed = r.margin >= -slack && strict_ok;
  r.warning = false;
  for (const auto& d : r.details) {
    if (d.strict && std::fabs(d.slack) <= slack) r.warning = true;
  }
  return c;
}

GernertCertificate gernert_certificate(std::size_t k) { return gernert_certificate(GernertParams(k)); }

nlohmann::ordered_json to_json(const GernertCertificate& c) {
  nlohmann::ordered_json j;
  j["k"] = c.params.k;
  j["n"] = c.params.n;
  j["mu1"] = c.mu1;
  j["mu2"] = c.mu2;
  j["value"] = c.value;
  j["predicted"] = c.predicted;
  j["exceeds_order"] = c.value > static_cast<double>(c.params.core());
  j["lower_bound"] = c.lower;
  j["upper_bound"] = c.upper;
  j["gap_to_upper_rate"] = 2.0 / std::sqrt(3.0) - gernert_rate();
  j["mu2_equals_8k_minus_1"] = c.mu2_equals_bound;
  j["spectrum_sound"] = c.sound;
  j["witness_graph6"] = c.witness_graph6;
  j["certificate"] = to_json(c.report);
  return j;
}

}  // namespace lincomb
