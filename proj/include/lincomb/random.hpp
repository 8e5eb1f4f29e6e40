#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "lincomb/graph.hpp"

namespace lincomb {

/// Splittable seed source. Every random stream in the library is derived from
/// one root seed by naming (and indexing) children, so results never depend on
/// thread scheduling or on how many draws sibling streams made.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : state_(mix(seed)) {}

  SeedStream child(std::string_view name) const;
  SeedStream child(std::uint64_t index) const;

  std::uint64_t value() const { return state_; }
  std::mt19937_64 engine() const { return std::mt19937_64(state_); }

  /// SplitMix64 finalizer.
  static std::uint64_t mix(std::uint64_t x);

 private:
  struct Raw {};
  SeedStream(Raw, std::uint64_t state) : state_(state) {}
  std::uint64_t state_;
};

using Rng = std::mt19937_64;

/// Uniform real in [0, 1) built from raw engine bits (portable across
/// standard libraries, unlike std::uniform_real_distribution).
double uniform01(Rng& rng);

/// Uniform integer in [lo, hi], inclusive, by rejection on raw bits.
std::uint64_t uniform_int(Rng& rng, std::uint64_t lo, std::uint64_t hi);

/// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double p, Rng& rng);

/// Random r-coloring of the vertices, then each bichromatic pair is an edge
/// with probability p.
Graph random_r_partite(std::size_t n, std::size_t r, double p, Rng& rng);

/// Pairs visited in random order; each is added with probability p when it
/// does not complete a K_r. Always K_r-free. Needs n <= kPredicateMaxOrder.
Graph random_kr_free(std::size_t n, std::size_t r, double p, Rng& rng);

}  // namespace lincomb
