#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "vertexfreq/graph.hpp"

namespace vertexfreq {

/// Path 0 - 1 - ... - (n-1). Requires n >= 1.
Graph path(std::size_t n);

/// Cycle on n >= 3 vertices.
Graph cycle(std::size_t n);

/// Complete graph K_n, n >= 1.
Graph complete(std::size_t n);

/// K_{m,n}: vertices 0..m-1 on one side, m..m+n-1 on the other. m, n >= 1.
Graph complete_bipartite(std::size_t m, std::size_t n);

/// Star with n leaves 0..n-1 and hub n; equal to complete_bipartite(n, 1).
Graph star(std::size_t n);

/// Generalised ladder with `rungs` rungs, each a path of `width` vertices.
///
/// Vertex (j, i) has flat index j * width + i. Rung edges join (j, i) and
/// (j, i + 1); rail edges join the rung endpoints (j, 0)-(j+1, 0) and
/// (j, width-1)-(j+1, width-1). Interior rung vertices have no rail edges.
/// Requires rungs >= 2 and width >= 2.
Graph generalized_ladder(std::size_t rungs, std::size_t width);

/// rows x cols grid graph, vertex (r, c) at index r * cols + c.
Graph grid(std::size_t rows, std::size_t cols);

/// Uniformly random labelled tree on n >= 1 vertices (Pruefer decoding with
/// std::mt19937_64 seeded by `seed`). Deterministic for a given seed.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Path with its middle vertex duplicated.
///
/// Left path p_1..p_k uses indices 0..k-1, right path q_1..q_k uses k..2k-1,
/// and the m centre vertices 2k..2k+m-1 are each adjacent to p_k and q_1 only.
/// Requires k >= 1 and m >= 1. With k = 1 and m >= 3 the graph is K_{2,m},
/// whose Fiedler space is spanned by centre differences rather than the
/// antisymmetric path mode.
Graph duplicated_middle_path(std::size_t k, std::size_t m);

/// Vertex layout of the barren graph on N + 7 vertices.
///
/// V1 = 0..N-1, V2 = {N}, V3 = {N+1, N+2}, V4 = {N+3, N+4}, V5 = {N+5},
/// V6 = {N+6}. Edges are K(V1,V2) + K(V1,V3) + K(V1,V4) + K(V3,V5) + K(V4,V6).
struct BarrenLayout {
  enum class VertexClass : std::uint8_t { kV1 = 1, kV2, kV3, kV4, kV5, kV6 };

  std::size_t n = 0;
  std::array<VertexSet, 6> classes;  // classes[c] is V_{c+1}

  const VertexSet& v(int index) const { return classes.at(static_cast<std::size_t>(index - 1)); }
  VertexClass class_of(Vertex x) const;
};

struct BarrenGraph {
  Graph graph;
  BarrenLayout layout;
};

/// Requires N >= 3.
BarrenGraph barren(std::size_t n);

/// K(S, T) on a universe of `vertex_count` vertices: every s in S joined to
/// every t in T.
Graph complete_bipartite_between(std::size_t vertex_count, const VertexSet& s, const VertexSet& t);

}  // namespace vertexfreq
