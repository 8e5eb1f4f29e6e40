#include "lincomb/random.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace lincomb {

std::uint64_t SeedStream::mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

SeedStream SeedStream::child(std::string_view name) const {
  // FNV-1a over the name, then mixed with the parent state.
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return SeedStream(Raw{}, mix(state_ ^ mix(h)));
}

SeedStream SeedStream::child(std::uint64_t index) const {
  return SeedStream(Raw{}, mix(state_ + mix(index ^ 0xA5A5A5A5A5A5A5A5ULL)));
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t uniform_int(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = hi - lo;
  if (span == ~std::uint64_t{0}) return rng();
  const std::uint64_t bound = span + 1;
  const std::uint64_t mask = std::bit_ceil(bound) - 1;
  while (true) {
    const std::uint64_t x = rng() & mask;
    if (x < bound) return lo + x;
  }
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (uniform01(rng) < p) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph random_r_partite(std::size_t n, std::size_t r, double p, Rng& rng) {
  if (r == 0) throw std::invalid_argument("random_r_partite: r must be >= 1");
  std::vector<std::size_t> color(n);
  for (auto& c : color) c = uniform_int(rng, 0, r - 1);
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      const double x = uniform01(rng);
      if (color[u] != color[v] && x < p) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph random_kr_free(std::size_t n, std::size_t r, double p, Rng& rng) {
  if (r < 2) throw std::invalid_argument("random_kr_free: r must be >= 2");
  if (n > kPredicateMaxOrder) throw std::invalid_argument("random_kr_free: order above predicate guard");
  std::vector<Edge> pairs;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
  }
  for (std::size_t i = pairs.size(); i > 1; --i) {
    std::swap(pairs[i - 1], pairs[uniform_int(rng, 0, i - 1)]);
  }
  std::vector<std::uint64_t> nbr(n, 0);
  GraphBuilder b(n);
  for (const auto& [u, v] : pairs) {
    if (uniform01(rng) >= p) continue;
    // Adding uv creates a K_r iff the common neighbourhood holds a K_{r-2}.
    std::uint64_t common = nbr[u] & nbr[v];
    std::size_t need = r - 2;
    bool creates = false;
    if (need == 0) {
      creates = true;
    } else {
      // Greedy is not enough here; do the exact search on the small mask.
      std::vector<std::uint64_t> stack_masks{common};
      std::vector<std::size_t> stack_need{need};
      while (!stack_masks.empty() && !creates) {
        std::uint64_t cand = stack_masks.back();
        std::size_t k = stack_need.back();
        stack_masks.pop_back();
        stack_need.pop_back();
        if (k == 0) {
          creates = true;
          break;
        }
        while (cand != 0) {
          if (static_cast<std::size_t>(std::popcount(cand)) < k) break;
          const int w = std::countr_zero(cand);
          cand &= cand - 1;
          stack_masks.push_back(cand & nbr[w]);
          stack_need.push_back(k - 1);
        }
      }
    }
    if (creates) continue;
    b.add_edge(u, v);
    nbr[u] |= std::uint64_t{1} << v;
    nbr[v] |= std::uint64_t{1} << u;
  }
  return std::move(b).build();
}

}  // namespace lincomb
