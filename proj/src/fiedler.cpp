#include "vertexfreq/fiedler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vertexfreq/errors.hpp"
#include "vertexfreq/tolerances.hpp"

namespace vertexfreq {

namespace {

std::string edge_text(Vertex a, Vertex b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

double eigen_residual(const Graph& g, const Signal& v, double lambda) {
  return (laplacian(g).cast<Complex>() * v.values() - lambda * v.values()).norm();
}

double residual_bound(double lambda) { return tol::kEigenResidual * std::max(1.0, std::abs(lambda)); }

VertexSet subset_where(const Eigen::VectorXd& values, auto predicate) {
  std::vector<Vertex> members;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (predicate(values(i))) members.push_back(static_cast<Vertex>(i));
  }
  return VertexSet(static_cast<std::size_t>(values.size()), std::move(members));
}

bool induced_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  return is_connected(induced_subgraph(g, s));
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> members;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(members));
  return VertexSet(a.universe(), std::move(members));
}

}  // namespace

FiedlerResult fiedler(const EigenBasis& b, double connectivity_tol) {
  if (b.size() < 2) throw PreconditionFailed("a Fiedler vector needs at least two vertices");
  const double lambda1 = b.eigenvalue(1);
  if (!(lambda1 > connectivity_tol)) {
    throw PreconditionFailed("graph is disconnected: lambda_1 = " + std::to_string(lambda1));
  }
  FiedlerResult out{b.vector(1), lambda1, 1};
  for (std::size_t k = 2; k < b.size(); ++k) {
    const double prev = b.eigenvalue(k - 1);
    if (b.eigenvalue(k) - prev >= tol::kDegeneracyGap * std::max(1.0, std::abs(prev))) break;
    ++out.multiplicity;
  }
  return out;
}

VertexPartition partition(const Signal& f, std::optional<double> tol) {
  const double scale = f.max_abs();
  if (!f.is_real(1e-12 * std::max(1.0, scale))) {
    throw PreconditionFailed("sign partitions need a real-valued signal");
  }
  const double threshold = tol.value_or(tol::kPartitionScale * scale);
  if (threshold < 0.0) throw InvalidArgument("partition tolerance must be non-negative");
  const Eigen::VectorXd values = f.real();
  VertexPartition out;
  out.positive = subset_where(values, [&](double x) { return x > threshold; });
  out.negative = subset_where(values, [&](double x) { return x < -threshold; });
  out.zero = subset_where(values, [&](double x) { return std::abs(x) <= threshold; });
  out.tol = threshold;
  out.source_signal = f;
  return out;
}

std::size_t partition_distance_check(const Graph& g, const VertexPartition& p) {
  if (p.positive.empty() || p.negative.empty()) {
    throw PreconditionFailed("partition has an empty sign class");
  }
  return set_distance(g, p.positive, p.negative);
}

SignConnectivity sign_connectivity_check(const Graph& g, const VertexPartition& p) {
  return {induced_connected(g, p.positive), induced_connected(g, p.negative)};
}

CharacteristicReport zero_ball_scan(const Graph& g, const VertexPartition& p) {
  if (p.zero.universe() != g.vertex_count()) throw DimensionMismatch(g.vertex_count(), p.zero.universe());
  CharacteristicReport out;
  out.zero_set = p.zero;
  for (Vertex x : p.zero) {
    VertexSet b = ball(g, x, 1);
    if (b.is_subset_of(p.zero)) {
      out.max_ball_size = std::max(out.max_ball_size, b.size());
      out.contained_balls.push_back({x, std::move(b)});
    }
  }
  return out;
}

std::vector<FlatBall> constant_ball_scan(const Graph& g, const Signal& f, const VertexPartition& p,
                                         std::optional<double> tol) {
  if (f.size() != g.vertex_count()) throw DimensionMismatch(g.vertex_count(), f.size());
  const double threshold = tol.value_or(tol::kFlatBallScale * f.max_abs());
  const Eigen::VectorXd values = f.real();
  std::vector<FlatBall> out;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const VertexSet* side = p.positive.contains(x) ? &p.positive
                            : p.negative.contains(x) ? &p.negative
                                                     : nullptr;
    if (side == nullptr) continue;
    VertexSet b = ball(g, x, 1);
    if (!b.is_subset_of(*side)) continue;
    double lo = values(static_cast<Eigen::Index>(x));
    double hi = lo;
    for (Vertex y : b) {
      lo = std::min(lo, values(static_cast<Eigen::Index>(y)));
      hi = std::max(hi, values(static_cast<Eigen::Index>(y)));
    }
    if (hi - lo < threshold) out.push_back({x, std::move(b), hi - lo});
  }
  return out;
}

std::vector<std::string> BarrenReport::failures() const {
  std::vector<std::string> out;
  if (!spectrum_matches) out.push_back("spectrum deviates from the closed form");
  if (!support_matches) out.push_back("Fiedler support is not V3 u V4 u V5 u V6");
  if (!zero_set_matches) out.push_back("Fiedler zero set is not V1 u V2");
  if (!shape_matches) out.push_back("Fiedler values do not have the +-a / +-b shape");
  return out;
}

BarrenReport verify_barren(std::size_t n, double tol) {
  const BarrenGraph bg = barren(n);
  const BarrenLayout& layout = bg.layout;
  BarrenReport report;
  report.n = n;
  report.tol = tol;
  report.closed_form = barren_closed_spectrum(n);

  const EigenBasis basis = eigendecompose(bg.graph);
  report.computed_eigenvalues = basis.eigenvalues();
  const std::vector<double> expected = report.closed_form.sorted_values();
  report.spectrum_matches = same_multiset(report.computed_eigenvalues, expected, tol);
  for (std::size_t k = 0; k < expected.size(); ++k) {
    report.max_eigenvalue_deviation =
        std::max(report.max_eigenvalue_deviation, std::abs(report.computed_eigenvalues[k] - expected[k]));
  }

  const FiedlerResult f = fiedler(basis);
  report.fiedler_eigenvalue = f.eigenvalue;
  report.fiedler_multiplicity = f.multiplicity;
  const Eigen::VectorXd phi = f.vector.real();
  for (Vertex v = 0; v < bg.graph.vertex_count(); ++v) {
    if (std::abs(phi(static_cast<Eigen::Index>(v))) > 1e-6) report.fiedler_support.push_back(v);
  }
  const VertexSet expected_support =
      set_union(set_union(layout.v(3), layout.v(4)), set_union(layout.v(5), layout.v(6)));
  report.support_matches = report.fiedler_support == expected_support.members();

  const VertexPartition part = partition(f.vector);
  report.zero_set = part.zero;
  report.zero_set_matches = part.zero == set_union(layout.v(1), layout.v(2));

  const auto at = [&](Vertex v) { return phi(static_cast<Eigen::Index>(v)); };
  const auto& v3 = layout.v(3).members();
  const auto& v4 = layout.v(4).members();
  report.a = at(v3[0]);
  report.b = at(layout.v(5).members()[0]);
  report.normalization = 4.0 * report.a * report.a + 2.0 * report.b * report.b;
  const bool symmetric = std::abs(at(v3[1]) - report.a) <= tol && std::abs(at(v4[0]) + report.a) <= tol &&
                         std::abs(at(v4[1]) + report.a) <= tol &&
                         std::abs(at(layout.v(6).members()[0]) + report.b) <= tol;
  const bool closed_form = std::abs(std::abs(report.a) - report.closed_form.fiedler_a) <= tol &&
                           std::abs(std::abs(report.b) - report.closed_form.fiedler_b) <= tol;
  report.shape_matches = symmetric && closed_form && std::abs(report.normalization - 1.0) <= 1e-9;
  return report;
}

LiftResult lift_common_eigenvector(std::span<const LiftComponent> components,
                                   std::span<const CrossEdge> connecting_edges, double tol) {
  if (components.empty()) throw PreconditionFailed("lift needs at least one component");
  if (connecting_edges.empty()) throw PreconditionFailed("lift needs a nonempty set of connecting edges");
  const double lambda = components.front().eigenvalue;
  if (!(lambda > 0.0)) throw PreconditionFailed("shared eigenvalue must be positive");

  std::vector<std::size_t> offsets;
  Graph merged(0);
  Eigen::VectorXcd values(0);
  for (std::size_t c = 0; c < components.size(); ++c) {
    const LiftComponent& comp = components[c];
    if (std::abs(comp.eigenvalue - lambda) > residual_bound(lambda)) {
      throw PreconditionFailed("component " + std::to_string(c) + " has eigenvalue " +
                               std::to_string(comp.eigenvalue) + ", expected the shared " +
                               std::to_string(lambda));
    }
    if (comp.eigenvector.size() != comp.graph.vertex_count()) {
      throw DimensionMismatch(comp.graph.vertex_count(), comp.eigenvector.size());
    }
    const double residual = eigen_residual(comp.graph, comp.eigenvector, lambda);
    if (residual > residual_bound(lambda)) {
      throw PreconditionFailed("component " + std::to_string(c) + " eigenpair residual " +
                               std::to_string(residual) + " is too large");
    }
    offsets.push_back(merged.vertex_count());
    merged = disjoint_union(merged, comp.graph);
    Eigen::VectorXcd grown(values.size() + comp.eigenvector.values().size());
    grown << values, comp.eigenvector.values();
    values = std::move(grown);
  }

  std::vector<Edge> bridges;
  for (const CrossEdge& e : connecting_edges) {
    if (e.graph_a >= components.size() || e.graph_b >= components.size()) {
      throw InvalidArgument("connecting edge names a missing component");
    }
    if (e.graph_a == e.graph_b) throw InvalidArgument("connecting edges must join different components");
    for (const auto& [graph, vertex] : {std::pair{e.graph_a, e.a}, std::pair{e.graph_b, e.b}}) {
      const LiftComponent& comp = components[graph];
      if (vertex >= comp.graph.vertex_count()) {
        throw InvalidArgument("connecting edge endpoint " + std::to_string(vertex) +
                              " out of range for component " + std::to_string(graph));
      }
      if (std::abs(comp.eigenvector[vertex]) > tol) {
        throw PreconditionFailed("connecting endpoint " + std::to_string(vertex) + " of component " +
                                 std::to_string(graph) + " is not a zero of its eigenvector");
      }
    }
    bridges.emplace_back(offsets[e.graph_a] + e.a, offsets[e.graph_b] + e.b);
  }

  LiftResult out;
  out.graph = add_edges(merged, bridges);
  out.eigenvalue = lambda;
  out.eigenvector = Signal(std::move(values));
  out.residual = eigen_residual(out.graph, out.eigenvector, lambda);
  if (out.residual > residual_bound(lambda)) {
    throw Error("lifted eigenpair failed verification (residual " + std::to_string(out.residual) + ")");
  }
  return out;
}

LiftResult extend_subgraph_eigenvector(const Graph& g, const VertexSet& s, double eigenvalue,
                                       const Signal& v, double tol) {
  if (s.universe() != g.vertex_count()) throw DimensionMismatch(g.vertex_count(), s.universe());
  if (s.empty()) throw PreconditionFailed("subgraph vertex set is empty");
  if (v.size() != s.size()) throw DimensionMismatch(s.size(), v.size());

  const Graph sub = induced_subgraph(g, s);
  const double sub_residual = eigen_residual(sub, v, eigenvalue);
  if (sub_residual > residual_bound(eigenvalue)) {
    throw PreconditionFailed("signal is not an eigenvector of the induced subgraph (residual " +
                             std::to_string(sub_residual) + ")");
  }
  const auto& members = s.members();
  for (std::size_t j = 0; j < members.size(); ++j) {
    for (Vertex w : g.neighbors(members[j])) {
      if (!s.contains(w) && std::abs(v[j]) > tol) {
        throw PreconditionFailed("boundary edge " + edge_text(members[j], w) +
                                 " leaves S at a vertex where the eigenvector is nonzero");
      }
    }
  }

  Eigen::VectorXcd extended = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(g.vertex_count()));
  for (std::size_t j = 0; j < members.size(); ++j) {
    extended(static_cast<Eigen::Index>(members[j])) = v[j];
  }
  LiftResult out;
  out.graph = g;
  out.eigenvalue = eigenvalue;
  out.eigenvector = Signal(std::move(extended));
  out.residual = eigen_residual(g, out.eigenvector, eigenvalue);
  if (out.residual > residual_bound(eigenvalue)) {
    throw Error("extended eigenpair failed verification (residual " + std::to_string(out.residual) + ")");
  }
  return out;
}

}  // namespace vertexfreq
