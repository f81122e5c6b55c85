#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support/oracles.hpp"
#include "vertexfreq/errors.hpp"
#include "vertexfreq/fiedler.hpp"
#include "vertexfreq/generators.hpp"
#include "vertexfreq/spectral.hpp"

using namespace vertexfreq;

namespace {

// Isomorphism for tiny graphs by brute force over permutations.
bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(a.vertex_count());
  for (Vertex i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (const Edge& e : a.edges()) {
      if (!b.has_edge(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool is_bipartition(const Graph& g, const std::vector<Vertex>& side) {
  for (const Edge& e : g.edges()) {
    const bool u = std::find(side.begin(), side.end(), e.u) != side.end();
    const bool v = std::find(side.begin(), side.end(), e.v) != side.end();
    if (u == v) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("basic families") {
  CHECK(path(1).vertex_count() == 1);
  CHECK(path(1).edge_count() == 0);
  CHECK(path(5).edge_count() == 4);
  CHECK(cycle(6).edge_count() == 6);
  CHECK(complete(5).edge_count() == 10);
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK(complete_bipartite(2, 3).has_edge(1, 4));
  CHECK_FALSE(complete_bipartite(2, 3).has_edge(0, 1));

  const Graph s = star(4);
  CHECK(s == complete_bipartite(4, 1));
  CHECK(degree(s, 4) == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(degree(s, v) == 1);

  CHECK_THROWS_AS(path(0), InvalidArgument);
  CHECK_THROWS_AS(cycle(2), InvalidArgument);
  CHECK_THROWS_AS(complete(0), InvalidArgument);
  CHECK_THROWS_AS(complete_bipartite(0, 2), InvalidArgument);
}

TEST_CASE("complete graph spectrum is 0 then N repeated") {
  for (std::size_t n = 2; n <= 9; ++n) {
    const Eigen::VectorXd ev = oracle::reference_eigenvalues(complete(n));
    CHECK(std::abs(ev(0)) < 1e-12);
    for (Eigen::Index k = 1; k < ev.size(); ++k) CHECK(ev(k) == doctest::Approx(static_cast<double>(n)));
  }
}

TEST_CASE("generalized ladder counts and shape") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::size_t m = 2; m <= 5; ++m) {
      const Graph g = generalized_ladder(n, m);
      CHECK(g.vertex_count() == n * m);
      CHECK(g.edge_count() == n * (m - 1) + 2 * (n - 1));
    }
  }
  const Graph l33 = generalized_ladder(3, 3);
  CHECK(l33.vertex_count() == 9);
  CHECK(l33.edge_count() == 10);
  CHECK(degree(l33, 4) == 2);  // interior rung vertex: no rail edges
  CHECK(l33.has_edge(0, 3));
  CHECK(l33.has_edge(2, 5));
  CHECK_FALSE(l33.has_edge(1, 4));
  CHECK(generalized_ladder(4, 2) == grid(4, 2));
  CHECK_THROWS_AS(generalized_ladder(1, 3), InvalidArgument);
  CHECK_THROWS_AS(generalized_ladder(3, 1), InvalidArgument);
}

TEST_CASE("grid counts") {
  for (std::size_t r = 1; r <= 6; ++r) {
    for (std::size_t c = 1; c <= 6; ++c) {
      const Graph g = grid(r, c);
      CHECK(g.vertex_count() == r * c);
      CHECK(g.edge_count() == r * (c - 1) + c * (r - 1));
    }
  }
}

TEST_CASE("random trees are deterministic spanning trees") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 1 + seed % 20;
    const Graph t = random_tree(n, seed);
    CHECK(t.vertex_count() == n);
    CHECK(t.edge_count() == n - 1);
    CHECK(is_connected(t));
    CHECK(t == random_tree(n, seed));
  }
  CHECK_FALSE(random_tree(12, 1) == random_tree(12, 2));
}

TEST_CASE("duplicated middle path") {
  CHECK(isomorphic(duplicated_middle_path(2, 1), path(5)));
  CHECK(isomorphic(duplicated_middle_path(3, 1), path(7)));
  const Graph g = duplicated_middle_path(3, 4);
  CHECK(g.vertex_count() == 10);
  for (Vertex c = 6; c < 10; ++c) {
    CHECK(degree(g, c) == 2);
    CHECK(g.has_edge(c, 2));
    CHECK(g.has_edge(c, 3));
  }
  CHECK_THROWS_AS(duplicated_middle_path(0, 2), InvalidArgument);
  CHECK_THROWS_AS(duplicated_middle_path(2, 0), InvalidArgument);
}

TEST_CASE("duplicated middle path centres lie in the Fiedler zero set") {
  for (std::size_t k = 2; k <= 4; ++k) {
    for (std::size_t m = 1; m <= 5; ++m) {
      const Graph g = duplicated_middle_path(k, m);
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(oracle::dense_laplacian(g));
      REQUIRE(ref.eigenvalues()(2) - ref.eigenvalues()(1) > 1e-6);  // simple lambda_1
      const Eigen::VectorXd phi = ref.eigenvectors().col(1);
      for (Vertex c = 2 * k; c < 2 * k + m; ++c) CHECK(std::abs(phi(static_cast<Eigen::Index>(c))) < 1e-9);
      // and through the library path
      const VertexPartition p = partition(fiedler(eigendecompose(g)).vector);
      for (Vertex c = 2 * k; c < 2 * k + m; ++c) CHECK(p.zero.contains(c));
    }
  }
}

TEST_CASE("barren layout, degrees and bipartition") {
  for (std::size_t n = 3; n <= 10; ++n) {
    const BarrenGraph b = barren(n);
    const Graph& g = b.graph;
    CHECK(g.vertex_count() == n + 7);
    CHECK(g.edge_count() == 5 * n + 4);
    CHECK(b.layout.v(1).size() == n);
    CHECK(b.layout.v(2).members() == std::vector<Vertex>{n});
    CHECK(b.layout.v(3).members() == std::vector<Vertex>{n + 1, n + 2});
    CHECK(b.layout.v(4).members() == std::vector<Vertex>{n + 3, n + 4});
    CHECK(b.layout.v(5).members() == std::vector<Vertex>{n + 5});
    CHECK(b.layout.v(6).members() == std::vector<Vertex>{n + 6});
    for (Vertex v = 0; v < n; ++v) {
      CHECK(degree(g, v) == 5);
      CHECK(b.layout.class_of(v) == BarrenLayout::VertexClass::kV1);
    }
    CHECK(degree(g, n) == n);
    CHECK(b.layout.class_of(n + 6) == BarrenLayout::VertexClass::kV6);
    CHECK(g.has_edge(n + 1, n + 5));
    CHECK(g.has_edge(n + 4, n + 6));
    CHECK_FALSE(g.has_edge(n + 1, n + 6));

    std::vector<Vertex> side{n, n + 1, n + 2, n + 3, n + 4};
    CHECK(is_bipartition(g, side));
  }
  CHECK_THROWS_AS(barren(2), InvalidArgument);
}

TEST_CASE("generators are deterministic") {
  CHECK(barren(7).graph == barren(7).graph);
  CHECK(generalized_ladder(5, 4) == generalized_ladder(5, 4));
  CHECK(duplicated_middle_path(3, 3) == duplicated_middle_path(3, 3));
}
