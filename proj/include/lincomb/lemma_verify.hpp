#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "lincomb/functional.hpp"
#include "lincomb/graph.hpp"

namespace lincomb {

/// One sub-inequality lhs <= rhs (lhs < rhs when strict); slack = rhs - lhs.
struct CheckRecord {
  std::string label;
  std::size_t index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool strict = false;
};

/// Outcome of one numerical certificate. passed <=> margin >= -numerical_slack.
/// warning flags a strict sub-inequality whose slack lies within
/// +-numerical_slack: it passes, but only thanks to the allowance.
struct CheckReport {
  std::string name;
  std::string subject;
  bool passed = true;
  bool warning = false;
  double margin = 0.0;
  double numerical_slack = 0.0;
  std::vector<CheckRecord> details;
};

/// Floor for inequality slack: the summed spectrum tolerances, at least this.
inline constexpr double kMinInequalitySlack = 1e-8;
/// Blow-up spectra must match the predicted multiset within this * t * n.
inline constexpr double kBlowupMatchPerUnit = 1e-7;

/// Eigenvalues of G^(t) vs {t mu_i(G)} plus n(t-1) zeros.
CheckReport check_blowup_spectrum_independent(const Graph& g, std::size_t t);

/// Eigenvalues of G^[t] vs {t mu_i(G) + t - 1} plus n(t-1) copies of -1.
CheckReport check_blowup_spectrum_clique(const Graph& g, std::size_t t);

/// For s = 1..k, the four sandwich bounds relating the extreme eigenvalues of
/// G^(t) and G^[t] to those of G, with error tn/sqrt(n-k). Bottom eigenvalues
/// of the blow-ups are taken at position tn-s+1. Needs t >= 2, 1 <= k < n.
CheckReport check_lemma_blowup_bounds(const Graph& g, std::size_t t, std::size_t k);

/// Largest s allowed by the single-vertex deletion bound: floor(3n/4).
std::size_t max_deletion_index(std::size_t n);
/// Largest s allowed by the l-vertex deletion bound: floor(3(n-l)/4).
std::size_t max_subset_deletion_index(std::size_t n, std::size_t l);

/// H = G - v. For each s: 0 <= mu_s(G) - mu_s(H) < 3 sqrt(n) and
/// 0 >= mu_{n-s+1}(G) - mu_{n-s}(H) > -3 sqrt(n). Rejects s outside
/// [1, floor(3n/4)] with std::out_of_range.
CheckReport check_vertex_deletion_bounds(const Graph& g, Vertex v, std::span<const std::size_t> s_values);

/// G2 = G - S, l = |S|. For each s: |mu_s(G) - mu_s(G2)| < 3 l sqrt(n) and
/// |mu_{n-s+1}(G) - mu_{n-l-s+1}(G2)| < 3 l sqrt(n).
CheckReport check_subset_deletion_bounds(const Graph& g, const VertexSet& removed,
                                         std::span<const std::size_t> s_values);

/// Cauchy interlacing for H = G - v: mu_{s+1}(G) <= mu_s(H) <= mu_s(G).
CheckReport check_interlacing(const Graph& g, Vertex v);

/// Compares the left halves of a vertex_deletion_bounds report with the
/// matching records of an interlacing report for the same (G, v): win1.lower at
/// s against upper at s, win2.upper at s against lower at n - s. Their slacks
/// must agree. Throws std::invalid_argument if the reports do not fit together.
CheckReport cross_check_interlacing(const CheckReport& deletion, const CheckReport& interlacing, std::size_t n);

/// The four facts behind the 2n/sqrt(3) bound on mu_1 + mu_2:
/// mu_1^2 + mu_2^2 <= 2m; mu_2(G) + mu_n(~G) <= -1; mu_2^2(G) <= mu_n^2(~G) + 1;
/// mu_1 + mu_2 <= 2n/sqrt(3).
CheckReport check_prop1_chain(const Graph& g);

/// One instance of the amplification step: G1 = G^(t) plus N - tn isolated
/// vertices, t = floor(N/n).
struct AmplificationReport {
  std::string subject;
  std::size_t n = 0;
  std::size_t big_n = 0;
  std::size_t t = 0;
  std::size_t padding = 0;
  double c_ref = 0.0;
  double eps = 0.0;
  double coefficient_norm = 0.0;
  double f_over_n = 0.0;
  double f1_over_big_n = 0.0;
  /// n(|c|+eps)/t, 3M/sqrt(n), 3M sqrt(n/t).
  std::array<double, 3> error_terms{};
  double numerical_slack = 0.0;
  /// |F(G)/n| <= |c_ref| + |eps|, the premise the error terms rely on.
  bool hypothesis_holds = false;
  bool member_amplified = false;
  bool chain_holds = false;

  bool passed() const { return chain_holds && member_amplified; }
};

/// Preconditions (std::invalid_argument): member(p, g); N >= 2n; 3n > 4k.
AmplificationReport amplify(const Graph& g, const LinearForm& f, const FamilyPredicate& p, std::size_t big_n,
                            double c_ref, double eps);

nlohmann::ordered_json to_json(const CheckReport& r);
nlohmann::ordered_json to_json(const AmplificationReport& r);

}  // namespace lincomb
