#include "lincomb/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace lincomb {

namespace {

std::string index_message(Vertex v, std::size_t n) {
  return "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n);
}

void require_predicate_size(const Graph& g) {
  if (g.order() > kPredicateMaxOrder) {
    throw std::invalid_argument("clique/coloring predicates support order <= " +
                                std::to_string(kPredicateMaxOrder) + ", got " +
                                std::to_string(g.order()));
  }
}

// Single-word neighbourhood masks, valid under the predicate size guard.
std::vector<std::uint64_t> neighbour_masks(const Graph& g) {
  std::vector<std::uint64_t> masks(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.words_per_row() > 0) masks[u] = g.row(u)[0];
  }
  return masks;
}

bool has_clique(const std::vector<std::uint64_t>& nbr, std::uint64_t candidates, std::size_t need) {
  if (need == 0) return true;
  if (static_cast<std::size_t>(std::popcount(candidates)) < need) return false;
  while (candidates != 0) {
    if (static_cast<std::size_t>(std::popcount(candidates)) < need) return false;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    // Only extend with higher-indexed vertices so each clique is visited once.
    if (has_clique(nbr, candidates & nbr[v], need - 1)) return true;
  }
  return false;
}

class Colorer {
 public:
  Colorer(const std::vector<std::uint64_t>& nbr, std::size_t colors)
      : nbr_(nbr), colors_(colors), color_(nbr.size(), kNone) {
    order_.resize(nbr.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount(nbr_[a]) > std::popcount(nbr_[b]);
    });
  }

  bool solve() { return assign(0, 0); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool assign(std::size_t pos, std::size_t used) {
    if (pos == order_.size()) return true;
    const std::size_t v = order_[pos];
    // Fresh colors are interchangeable: try at most one unused color.
    const std::size_t limit = std::min(colors_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      bool clash = false;
      std::uint64_t m = nbr_[v];
      while (m != 0) {
        const int w = std::countr_zero(m);
        m &= m - 1;
        if (color_[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color_[v] = c;
      if (assign(pos + 1, std::max(used, c + 1))) return true;
      color_[v] = kNone;
    }
    return false;
  }

  const std::vector<std::uint64_t>& nbr_;
  std::size_t colors_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> order_;
};

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  for (std::size_t i = 1; i < members_.size(); ++i) {
    if (members_[i - 1] >= members_[i]) {
      throw std::invalid_argument("vertex set must be strictly increasing");
    }
  }
}

VertexSet VertexSet::range(std::size_t n) {
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return VertexSet(std::move(all));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::complement_in(std::size_t n) const {
  std::vector<Vertex> rest;
  rest.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!contains(v)) rest.push_back(v);
  }
  return VertexSet(std::move(rest));
}

Graph::Graph(std::size_t n)
    : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(n_ * words_, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range(index_message(std::max(u, v), n_));
  return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
}

std::size_t Graph::degree(Vertex u) const {
  std::size_t d = 0;
  for (Word w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::span<const Graph::Word> Graph::row(Vertex u) const {
  if (u >= n_) throw std::out_of_range(index_message(u, n_));
  return {bits_.data() + u * words_, words_};
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex v = 1; v < n_; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<double> Graph::adjacency_matrix() const {
  std::vector<double> a(n_ * n_, 0.0);
  for (Vertex u = 0; u < n_; ++u) {
    const Word* r = bits_.data() + u * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      Word m = r[w];
      while (m != 0) {
        const int b = std::countr_zero(m);
        m &= m - 1;
        a[u * n_ + w * kWordBits + static_cast<std::size_t>(b)] = 1.0;
      }
    }
  }
  return a;
}

Graph Graph::toggled(Vertex u, Vertex v) const {
  GraphBuilder b(*this);
  b.toggle_edge(u, v);
  return std::move(b).build();
}

void Graph::set(Vertex u, Vertex v, bool on) {
  const bool was = adjacent(u, v);
  if (was == on) return;
  const Word bu = Word{1} << (v % kWordBits);
  const Word bv = Word{1} << (u % kWordBits);
  if (on) {
    bits_[u * words_ + v / kWordBits] |= bu;
    bits_[v * words_ + u / kWordBits] |= bv;
    ++edges_;
  } else {
    bits_[u * words_ + v / kWordBits] &= ~bu;
    bits_[v * words_ + u / kWordBits] &= ~bv;
    --edges_;
  }
}

void GraphBuilder::check(Vertex u, Vertex v) const {
  const std::size_t n = g_.order();
  if (u >= n) throw std::out_of_range(index_message(u, n));
  if (v >= n) throw std::out_of_range(index_message(v, n));
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  g_.set(u, v, true);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  g_.set(u, v, false);
  return *this;
}

GraphBuilder& GraphBuilder::toggle_edge(Vertex u, Vertex v) {
  check(u, v);
  g_.set(u, v, !g_.adjacent(u, v));
  return *this;
}

Graph complete(std::size_t n) { return complement(Graph(n)); }

Graph empty(std::size_t n) { return Graph(n); }

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t off = g.order();
  GraphBuilder b(off + h.order());
  for (const auto& [u, v] : g.edges()) b.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) b.add_edge(u + off, v + off);
  return std::move(b).build();
}

Graph join(const Graph& g, const Graph& h) {
  const std::size_t off = g.order();
  GraphBuilder b(disjoint_union(g, h));
  for (Vertex u = 0; u < off; ++u) {
    for (Vertex v = 0; v < h.order(); ++v) b.add_edge(u, off + v);
  }
  return std::move(b).build();
}

Graph blowup_independent(const Graph& g, std::size_t t) {
  if (t == 0) throw std::invalid_argument("blow-up factor must be >= 1");
  GraphBuilder b(g.order() * t);
  for (const auto& [u, v] : g.edges()) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) b.add_edge(u * t + i, v * t + j);
    }
  }
  return std::move(b).build();
}

Graph blowup_clique(const Graph& g, std::size_t t) {
  GraphBuilder b(blowup_independent(g, t));
  for (Vertex u = 0; u < g.order(); ++u) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = i + 1; j < t; ++j) b.add_edge(u * t + i, u * t + j);
    }
  }
  return std::move(b).build();
}

Graph add_isolated(const Graph& g, std::size_t m) { return disjoint_union(g, Graph(m)); }

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  const auto members = s.members();
  for (Vertex v : members) {
    if (v >= g.order()) throw std::out_of_range(index_message(v, g.order()));
  }
  GraphBuilder b(members.size());
  for (std::size_t j = 1; j < members.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (g.adjacent(members[i], members[j])) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

bool is_kr_free(const Graph& g, std::size_t r) {
  if (r < 2) throw std::invalid_argument("K_r-freeness needs r >= 2");
  require_predicate_size(g);
  const auto nbr = neighbour_masks(g);
  const std::size_t n = g.order();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return !has_clique(nbr, all, r);
}

bool is_r_partite(const Graph& g, std::size_t r) {
  if (r == 0) throw std::invalid_argument("r-partiteness needs r >= 1");
  require_predicate_size(g);
  if (g.edge_count() == 0) return true;
  if (r >= g.order()) return true;
  return Colorer(neighbour_masks(g), r).solve();
}

std::vector<std::size_t> degree_multiset(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (Vertex u = 0; u < g.order(); ++u) d[u] = g.degree(u);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace lincomb
