#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lincomb/graph.hpp"
#include "lincomb/spectrum.hpp"

namespace lincomb {

/// F(G) = sum_i alpha_i mu_i(G) + beta_i mu_{n-i+1}(G)
///            + gamma_i mu_i(~G) + delta_i mu_{n-i+1}(~G),   i = 1..k.
class LinearForm {
 public:
  /// Throws std::invalid_argument unless all four vectors share a length
  /// k >= 1 and every coefficient is finite.
  LinearForm(std::vector<double> alpha, std::vector<double> beta, std::vector<double> gamma,
             std::vector<double> delta);

  /// Only the given vectors; missing ones are zero-filled to the longest.
  static LinearForm from_parts(std::vector<double> alpha, std::vector<double> beta = {},
                               std::vector<double> gamma = {}, std::vector<double> delta = {});

  std::size_t k() const { return alpha_.size(); }
  const std::vector<double>& alpha() const { return alpha_; }
  const std::vector<double>& beta() const { return beta_; }
  const std::vector<double>& gamma() const { return gamma_; }
  const std::vector<double>& delta() const { return delta_; }

  bool uses_graph() const;
  bool uses_complement() const;

  /// (gamma, delta, alpha, beta): the same objective read on the complement.
  LinearForm swapped() const;

  bool operator==(const LinearForm&) const = default;

 private:
  std::vector<double> alpha_, beta_, gamma_, delta_;
};

/// a*F + b*H. Throws when k differs.
LinearForm combine(double a, const LinearForm& f, double b, const LinearForm& h);

/// M = sum_i |alpha_i| + |beta_i| + |gamma_i| + |delta_i|; |F(G)| <= M n.
double coefficient_norm(const LinearForm& f);

/// Throws OrderTooSmall when g.order() < f.k().
double evaluate(const LinearForm& f, const Graph& g);

/// Evaluates from precomputed spectra of G and its complement. Either may be
/// null when the corresponding coefficients are all zero.
double evaluate(const LinearForm& f, const Spectrum* graph, const Spectrum* complement_graph);

/// Named objectives: "mu1+mun", "mu1-mun", "mu1+mu2", "mu1+cmu1", "mui+cmui"
/// (needs i), "mu1". Returns nullopt for unknown names.
std::optional<LinearForm> preset_form(std::string_view name, std::size_t i = 1);
std::vector<std::string> preset_names();

/// {"k":..,"alpha":[..],"beta":[..],"gamma":[..],"delta":[..]}
std::string form_to_json(const LinearForm& f);
/// Accepts the JSON object above or flat "key = v1,v2" lines ('#' comments).
/// Throws ParseError.
LinearForm parse_form(std::string_view text);

/// A multiplicative graph family.
class FamilyPredicate {
 public:
  enum class Kind { All, KrFree, RPartite };

  static FamilyPredicate all() { return FamilyPredicate(Kind::All, 0); }
  /// Throws std::invalid_argument for r < 3.
  static FamilyPredicate kr_free(std::size_t r);
  /// Throws std::invalid_argument for r < 1.
  static FamilyPredicate r_partite(std::size_t r);

  Kind kind() const { return kind_; }
  std::size_t r() const { return r_; }

  /// "all", "kr-free:<r>", "r-partite:<r>".
  std::string name() const;
  /// Inverse of name(). Throws std::invalid_argument.
  static FamilyPredicate parse(std::string_view text);

  bool operator==(const FamilyPredicate&) const = default;

 private:
  FamilyPredicate(Kind kind, std::size_t r) : kind_(kind), r_(r) {}
  Kind kind_;
  std::size_t r_;
};

bool member(const FamilyPredicate& p, const Graph& g);

}  // namespace lincomb
