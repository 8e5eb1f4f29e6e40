#pragma once

#include <cstddef>

#include "json.hpp"
#include "lincomb/graph.hpp"
#include "lincomb/lemma_verify.hpp"

namespace lincomb {

/// Parameters of the K_{5k} v (K_{8k} u K_{8k}) family padded to order n.
struct GernertParams {
  std::size_t k = 1;
  std::size_t n = 21;

  /// Throws std::invalid_argument unless k >= 1 and n >= 21k.
  GernertParams(std::size_t k, std::size_t n);
  /// n = 21k.
  explicit GernertParams(std::size_t k) : GernertParams(k, 21 * k) {}
  /// k = floor(n / 21); needs n >= 21.
  static GernertParams for_order(std::size_t n);

  std::size_t core() const { return 21 * k; }
};

/// join(K_{5k}, K_{8k} u K_{8k}) followed by n - 21k isolated vertices.
/// Layout: [0, 5k) the K_{5k}, then the two K_{8k} blocks, then padding.
Graph gernert_graph(const GernertParams& p);

/// (29k - 4 + k sqrt(329)) / 2: the positive root (13k - 2 + k sqrt(329)) / 2
/// of (x - 5k + 1)(x - 8k + 1) - 80k^2 = 0, plus mu_2 = 8k - 1.
double gernert_predicted_value(std::size_t k);

/// Positive root of the quotient quadratic, i.e. mu_1 of the core.
double gernert_quotient_root(std::size_t k);

/// (x - 5k + 1)(x - 8k + 1) - 80k^2.
double gernert_quadratic(std::size_t k, double x);

/// (29 + sqrt(329)) / 42 * n - 25.
double lower_bound(std::size_t n);

/// 2n / sqrt(3).
double upper_bound(std::size_t n);

/// (29 + sqrt(329)) / 42, the growth rate of the family.
double gernert_rate();

/// Largest core order the certificate will solve.
inline constexpr std::size_t kGernertSolverBudget = 2000;

struct GernertCertificate {
  GernertParams params = GernertParams(1);
  double mu1 = 0.0;
  double mu2 = 0.0;
  double value = 0.0;       // mu1 + mu2 from the eigensolver
  double predicted = 0.0;   // closed form
  double lower = 0.0;       // lower_bound(n)
  double upper = 0.0;       // upper_bound(n)
  bool mu2_equals_bound = false;  // mu2 == 8k - 1 within slack (recorded, not asserted)
  bool sound = false;       // trace/energy identities of the solved spectrum
  std::string witness_graph6;
  CheckReport report;
};

/// Solves the spectrum of gernert_graph(p) and asserts: value >= predicted,
/// mu2 >= 8k - 1, value > 21k, value > lower_bound(n), value <= upper_bound(n),
/// all up to the solver slack. Throws BudgetExceeded when n > budget.
GernertCertificate gernert_certificate(const GernertParams& p, std::size_t budget = kGernertSolverBudget);
GernertCertificate gernert_certificate(std::size_t k);

nlohmann::ordered_json to_json(const GernertCertificate& c);

}  // namespace lincomb
