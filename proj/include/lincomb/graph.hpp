#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace lincomb {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Strictly increasing list of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  /// All of [0, n).
  static VertexSet range(std::size_t n);

  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  /// [0, n) minus this set.
  VertexSet complement_in(std::size_t n) const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

/// Loop-free undirected labeled graph on {0, ..., n-1}, stored as a symmetric
/// bit matrix with one row of 64-bit words per vertex. Immutable once built;
/// use GraphBuilder or the free operations below to make new graphs.
class Graph {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Graph() = default;
  /// n isolated vertices.
  explicit Graph(std::size_t n);

  /// Throws std::invalid_argument on loops and std::out_of_range on bad indices.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return edges_; }
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex u) const;

  std::size_t words_per_row() const { return words_; }
  std::span<const Word> row(Vertex u) const;

  /// Edges (u, v) with u < v, ordered by v then u (graph6 bit order).
  std::vector<Edge> edges() const;

  /// Row-major dense 0/1 adjacency matrix.
  std::vector<double> adjacency_matrix() const;

  /// Copy with the adjacency of {u, v} flipped.
  Graph toggled(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const = default;

 private:
  friend class GraphBuilder;

  void set(Vertex u, Vertex v, bool on);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edges_ = 0;
  std::vector<Word> bits_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}
  explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  GraphBuilder& toggle_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  std::size_t order() const { return g_.order(); }

  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

 private:
  void check(Vertex u, Vertex v) const;
  Graph g_;
};

Graph complete(std::size_t n);
Graph empty(std::size_t n);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

/// G^(t): every vertex u becomes the independent block [u*t, (u+1)*t) and
/// blocks of adjacent vertices are completely joined. Throws on t == 0.
Graph blowup_independent(const Graph& g, std::size_t t);

/// G^[t]: G^(t) with every block turned into a clique. Equals
/// complement(blowup_independent(complement(g), t)).
Graph blowup_clique(const Graph& g, std::size_t t);

/// Appends m isolated vertices after the existing ones.
Graph add_isolated(const Graph& g, std::size_t m);

/// Subgraph induced by S, relabeled in increasing order of S.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Exact clique / coloring predicates; graphs larger than this are rejected.
inline constexpr std::size_t kPredicateMaxOrder = 64;

/// True iff g has no clique on r vertices. Requires r >= 2.
bool is_kr_free(const Graph& g, std::size_t r);

/// True iff g admits a proper r-coloring. Requires r >= 1.
bool is_r_partite(const Graph& g, std::size_t r);

/// Sorted degree sequence; used to compare graphs up to relabeling.
std::vector<std::size_t> degree_multiset(const Graph& g);

}  // namespace lincomb
