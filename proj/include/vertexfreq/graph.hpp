#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "vertexfreq/signal.hpp"

namespace vertexfreq {

using Vertex = std::size_t;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  /// Normalises the endpoint order; does not reject u == v (Graph does).
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..N-1.
///
/// Immutable after construction. Edges are kept as a sorted, duplicate-free
/// list of (min, max) pairs so every iteration order is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  /// Throws InvalidArgument on self-loops or out-of-range endpoints.
  /// Repeated edges are absorbed.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);
  Graph(std::size_t vertex_count, std::initializer_list<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;

  /// Sorted neighbour list of v.
  std::span<const Vertex> neighbors(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Sorted duplicate-free subset of 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::size_t universe, std::vector<Vertex> members);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& members() const noexcept { return members_; }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Vertex> members_;
};

/// Sentinel returned by distance queries across components.
inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

std::size_t degree(const Graph& g, Vertex v);

Eigen::MatrixXd adjacency_matrix(const Graph& g);
Eigen::MatrixXd degree_matrix(const Graph& g);

/// L = D - A.
Eigen::MatrixXd laplacian(const Graph& g);

/// (L f)(x) = sum over neighbours y of f(x) - f(y).
std::complex<double> laplacian_apply(const Graph& g, const Signal& f, Vertex x);

/// Sum over edges of |f(x) - f(y)|^2, i.e. <L f, f>.
double dirichlet_energy(const Graph& g, const Signal& f);

/// BFS hop distance, or kUnreachable.
std::size_t distance(const Graph& g, Vertex x, Vertex y);

/// Hop distances from x to every vertex (kUnreachable where disconnected).
std::vector<std::size_t> distances_from(const Graph& g, Vertex x);

/// Closed ball {y : d(x, y) <= r}.
VertexSet ball(const Graph& g, Vertex x, std::size_t r);

/// min over s in S, t in T of d(s, t). Throws InvalidArgument on empty sets.
std::size_t set_distance(const Graph& g, const VertexSet& s, const VertexSet& t);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Edge union over a shared vertex set.
Graph graph_sum(const Graph& a, const Graph& b);

/// b's vertices are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

Graph add_edges(const Graph& g, std::span<const Edge> new_edges);

/// Replaces e = {u, v} with {u, w}, {w, v}; w gets index N.
Graph subdivide_edge(const Graph& g, Edge e);

/// Identifies the endpoints of e into the smaller index and reindexes densely.
Graph contract_edge(const Graph& g, Edge e);

/// Subgraph induced on s; vertex j of the result is s.members()[j].
Graph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace vertexfreq
