#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lincomb/functional.hpp"
#include "lincomb/graph.hpp"
#include "lincomb/random.hpp"

namespace lincomb {

enum class SearchMethod { Exhaustive, Stochastic };

std::string method_name(SearchMethod m);

/// Best value of a LinearForm found over a family at one order.
struct ExtremalRecord {
  std::size_t n = 0;
  FamilyPredicate family = FamilyPredicate::all();
  LinearForm form = LinearForm::from_parts({1.0});
  double value = 0.0;
  Graph witness;
  SearchMethod method = SearchMethod::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t evaluations = 0;

  double phi() const { return value / static_cast<double>(n); }
};

inline constexpr std::size_t kDefaultExhaustiveCap = 7;

/// Values are ranked on this grid so that labelings of one graph, whose
/// spectra differ only by rounding, tie exactly.
inline constexpr double kRankingGrid = 1e-9;
double ranking_key(double value);

/// Number of vertex pairs, i.e. bits in a labeled-graph mask.
std::size_t pair_count(std::size_t n);

/// Graph whose edges are the set bits of `mask`, bit e being the e-th pair in
/// graph6 order (0,1), (0,2), (1,2), (0,3), ...
Graph labeled_graph(std::size_t n, std::uint64_t mask);
std::uint64_t labeled_mask(const Graph& g);

/// Maximum of F over every labeled member graph on n vertices; ties go to the
/// smallest mask. Masks are sharded across OpenMP threads. Throws
/// BudgetExceeded when n > cap and OrderTooSmall when n < F.k.
ExtremalRecord exhaustive(std::size_t n, const LinearForm& f, const FamilyPredicate& p,
                          std::size_t cap = kDefaultExhaustiveCap);

/// Single-threaded reference for exhaustive().
ExtremalRecord exhaustive_serial(std::size_t n, const LinearForm& f, const FamilyPredicate& p,
                                 std::size_t cap = kDefaultExhaustiveCap);

/// Strict improvement needed to accept an edge flip.
inline constexpr double kImprovementThreshold = 1e-10;

struct ClimbResult {
  Graph best;
  double value = 0.0;
  std::vector<double> accepted_values;  // value after each accepted flip, starting with the start value
  std::uint64_t evaluations = 0;
};

/// First-improvement hill climbing over single edge flips, scanning pairs in a
/// fresh random order after every accepted move. Stops at a local optimum or
/// after max_moves accepted flips. Candidate flips are evaluated in parallel
/// blocks; the first improving flip in scan order wins.
ClimbResult hill_climb(const Graph& start, const LinearForm& f, const FamilyPredicate& p, Rng& rng,
                       std::size_t max_moves);

/// Random member of the family on n vertices (edge density 1/2).
/// All: rejection sampling (at most kMaxMemberDraws draws); RPartite: random
/// coloring with bichromatic pairs kept with probability 1/2; KrFree: random
/// pair order, each pair kept with probability 1/2 unless it closes a K_r.
Graph sample_member(std::size_t n, const FamilyPredicate& p, Rng& rng);
inline constexpr std::size_t kMaxMemberDraws = 10000;

struct StochasticOptions {
  std::uint64_t seed = 0;
  std::size_t restarts = 8;
  std::size_t steps = 1000;
  /// Start restart 0 from this graph instead of a random member.
  std::optional<Graph> initial;
};

/// Best of `restarts` hill climbs, each from its own seed stream. Ties between
/// restarts go to the lexicographically smaller graph6 string.
ExtremalRecord stochastic(std::size_t n, const LinearForm& f, const FamilyPredicate& p,
                          const StochasticOptions& opts);

struct PhiPolicy {
  std::size_t exhaustive_cap = kDefaultExhaustiveCap;
  std::uint64_t seed = 0;
  std::size_t restarts = 8;
  std::size_t steps = 1000;
  /// For n >= 21 seed restart 0 from the Gernert graph of that order.
  bool seed_with_gernert = false;
};

/// One record per order: exhaustive when n <= cap, stochastic otherwise.
std::vector<ExtremalRecord> phi_table(const LinearForm& f, const FamilyPredicate& p,
                                      const std::vector<std::size_t>& orders, const PhiPolicy& policy);

/// Re-checks membership and re-evaluates the witness. Throws std::logic_error
/// on mismatch beyond kMinWitnessSlack.
void validate_record(const ExtremalRecord& r);
inline constexpr double kMinWitnessSlack = 1e-8;

/// Columns: n,value,phi,method,seed,witness_graph6
void write_phi_csv(std::ostream& out, const std::vector<ExtremalRecord>& records);

nlohmann::ordered_json to_json(const ExtremalRecord& r);

}  // namespace lincomb
