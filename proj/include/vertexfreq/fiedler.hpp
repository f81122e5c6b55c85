#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vertexfreq/generators.hpp"
#include "vertexfreq/graph.hpp"
#include "vertexfreq/signal.hpp"
#include "vertexfreq/spectral.hpp"

namespace vertexfreq {

struct FiedlerResult {
  Signal vector;              // phi_1 under the eigendecompose() conventions
  double eigenvalue = 0.0;    // lambda_1
  std::size_t multiplicity = 0;
  /// multiplicity > 1: the zero set depends on the chosen basis vector.
  bool basis_dependent() const { return multiplicity > 1; }
};

/// Fiedler vector of the basis' graph. Throws PreconditionFailed when
/// lambda_1 <= connectivity_tol (disconnected graph) or N < 2.
FiedlerResult fiedler(const EigenBasis& b, double connectivity_tol = 1e-8);

/// V = V+ u V- u V0 for a real signal.
struct VertexPartition {
  VertexSet positive;
  VertexSet negative;
  VertexSet zero;
  double tol = 0.0;
  Signal source_signal;
};

/// Zero means |f(i)| <= tol; the default tol is 1e-8 * |f|_inf. Throws
/// PreconditionFailed for signals with non-zero imaginary parts.
VertexPartition partition(const Signal& f, std::optional<double> tol = std::nullopt);

/// d(V+, V-). For a Fiedler partition of a connected graph this is at most 2.
/// Throws PreconditionFailed if either side is empty.
std::size_t partition_distance_check(const Graph& g, const VertexPartition& p);

struct SignConnectivity {
  bool positive_connected = false;
  bool negative_connected = false;
};

/// Whether the subgraphs induced on V+ and on V- are connected. Reports; it
/// makes no claim for signals that are not Fiedler vectors.
SignConnectivity sign_connectivity_check(const Graph& g, const VertexPartition& p);

struct ContainedBall {
  Vertex center = 0;
  VertexSet ball;
};

struct CharacteristicReport {
  VertexSet zero_set;
  std::vector<ContainedBall> contained_balls;  // radius-1 balls inside zero_set
  std::size_t max_ball_size = 0;
};

CharacteristicReport zero_ball_scan(const Graph& g, const VertexPartition& p);

struct FlatBall {
  Vertex center = 0;
  VertexSet ball;
  double variation = 0.0;  // max - min of f over the ball
};

/// Radius-1 balls lying entirely in V+ or entirely in V- on which f varies by
/// less than tol (default 1e-11 * |f|_inf). Genuine eigenvectors with
/// lambda > 0 produce none.
std::vector<FlatBall> constant_ball_scan(const Graph& g, const Signal& f, const VertexPartition& p,
                                         std::optional<double> tol = std::nullopt);

/// Outcome of checking barren(N) against its closed-form spectrum.
struct BarrenReport {
  std::size_t n = 0;
  double tol = 0.0;
  BarrenSpectrum closed_form;
  std::vector<double> computed_eigenvalues;
  double max_eigenvalue_deviation = 0.0;  // sorted elementwise
  bool spectrum_matches = false;

  double fiedler_eigenvalue = 0.0;
  std::size_t fiedler_multiplicity = 0;
  std::vector<Vertex> fiedler_support;  // entries with |phi_1| > 1e-6
  bool support_matches = false;         // support == V3 u V4 u V5 u V6
  VertexSet zero_set;
  bool zero_set_matches = false;        // V0 == V1 u V2

  double a = 0.0;  // phi_1 on V3 (negated on V4)
  double b = 0.0;  // phi_1 on V5 (negated on V6)
  double normalization = 0.0;  // 4 a^2 + 2 b^2
  bool shape_matches = false;

  bool passed() const { return spectrum_matches && support_matches && zero_set_matches && shape_matches; }
  std::vector<std::string> failures() const;
};

/// Builds barren(N), eigensolves it and checks the closed-form spectrum and
/// the six-vertex Fiedler support. Failures are reported, never thrown;
/// only N < 3 throws.
BarrenReport verify_barren(std::size_t n, double tol = 1e-8);

struct LiftResult {
  Graph graph;
  double eigenvalue = 0.0;
  Signal eigenvector;
  double residual = 0.0;  // |L v - lambda v|_2
};

/// One graph with an eigenpair (eigenvalue shared across all components).
struct LiftComponent {
  Graph graph;
  double eigenvalue = 0.0;
  Signal eigenvector;
};

/// Edge between vertex `a` of component `graph_a` and vertex `b` of
/// component `graph_b` (graph_a != graph_b).
struct CrossEdge {
  std::size_t graph_a = 0;
  Vertex a = 0;
  std::size_t graph_b = 0;
  Vertex b = 0;
};

/// Disjoint union of the components plus the connecting edges, carrying the
/// concatenated eigenvectors. Every connecting endpoint must lie in the zero
/// set of its component's eigenvector (|value| <= tol). The resulting
/// eigenpair is verified before returning.
LiftResult lift_common_eigenvector(std::span<const LiftComponent> components,
                                   std::span<const CrossEdge> connecting_edges, double tol = 1e-9);

/// Zero-extends an eigenvector v of the subgraph induced on S (v indexed in
/// S's sorted order) to all of g. Every edge leaving S must start at a zero
/// of v. The Laplacian of the induced subgraph uses degrees within S.
LiftResult extend_subgraph_eigenvector(const Graph& g, const VertexSet& s, double eigenvalue,
                                       const Signal& v, double tol = 1e-9);

}  // namespace vertexfreq
