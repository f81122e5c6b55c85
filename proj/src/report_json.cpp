#include "report_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace vertexfreq::report {

Json number(double x) {
  if (!std::isfinite(x)) return Json(nullptr);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double rounded = std::strtod(buf, nullptr);
  return Json(rounded == 0.0 ? 0.0 : rounded);
}

Json indices(const std::vector<std::size_t>& values) { return Json(values); }

Json vertex_set(const VertexSet& s) { return indices(s.members()); }

Json graph(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"edges", edges}, {"n", g.vertex_count()}};
}

Json signal(const Eigen::VectorXcd& values) {
  Json out = Json::array();
  const bool real = values.size() == 0 || values.imag().cwiseAbs().maxCoeff() <= 1e-12;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (real) {
      out.push_back(number(values(i).real()));
    } else {
      out.push_back({number(values(i).real()), number(values(i).imag())});
    }
  }
  return out;
}

Json spectrum(const EigenBasis& b) {
  Json values = Json::array();
  for (double v : b.eigenvalues()) values.push_back(number(v));
  Json vectors = Json::array();
  for (std::size_t k = 0; k < b.size(); ++k) vectors.push_back(signal(b.vectors().col(static_cast<Eigen::Index>(k))));
  return {{"eigenvalues", values}, {"field", b.is_real() ? "real" : "complex"},
          {"n", b.size()}, {"vectors", vectors}};
}

Json translation(const TranslationAnalysis& a) {
  return {{"condition", number(a.condition)}, {"invertible", a.invertible}, {"rank", a.rank},
          {"tol", number(a.tol)},            {"unitary", a.unitary},       {"vanishing", indices(a.vanishing_indices)},
          {"vertex", a.vertex}};
}

Json semigroup(const SemigroupResult& r) {
  if (const auto* table = std::get_if<SemigroupTable>(&r)) {
    return {{"closed", true}, {"table", table->table}};
  }
  const auto& w = std::get<FailureWitness>(r);
  return {{"closed", false}, {"i", w.i}, {"j", w.j}, {"product", signal(w.product)}};
}

Json fiedler(const Graph& g, const FiedlerResult& f, const VertexPartition& p) {
  Json out{{"basis_dependent", f.basis_dependent()},
           {"eigenvalue", number(f.eigenvalue)},
           {"multiplicity", f.multiplicity},
           {"negative", vertex_set(p.negative)},
           {"positive", vertex_set(p.positive)},
           {"tol", number(p.tol)},
           {"vector", signal(f.vector.values())},
           {"zero", vertex_set(p.zero)}};
  if (!p.positive.empty() && !p.negative.empty()) out["sign_distance"] = partition_distance_check(g, p);
  const SignConnectivity c = sign_connectivity_check(g, p);
  out["negative_connected"] = c.negative_connected;
  out["positive_connected"] = c.positive_connected;
  return out;
}

Json zero_scan(const CharacteristicReport& r, const std::vector<FlatBall>& flat, double tol) {
  Json balls = Json::array();
  for (const auto& b : r.contained_balls) balls.push_back({{"ball", vertex_set(b.ball)}, {"center", b.center}});
  Json flats = Json::array();
  for (const auto& b : flat) {
    flats.push_back({{"ball", vertex_set(b.ball)}, {"center", b.center}, {"variation", number(b.variation)}});
  }
  return {{"contained_balls", balls}, {"flat_balls", flats}, {"max_ball_size", r.max_ball_size},
          {"tol", number(tol)},       {"zero_set", vertex_set(r.zero_set)}};
}

Json barren(const BarrenReport& r) {
  Json computed = Json::array();
  for (double v : r.computed_eigenvalues) computed.push_back(number(v));
  Json expected = Json::array();
  for (double v : r.closed_form.sorted_values()) expected.push_back(number(v));
  return {{"a", number(r.a)},
          {"b", number(r.b)},
          {"closed_form_a", number(r.closed_form.fiedler_a)},
          {"closed_form_b", number(r.closed_form.fiedler_b)},
          {"computed_eigenvalues", computed},
          {"expected_eigenvalues", expected},
          {"failures", r.failures()},
          {"fiedler_eigenvalue", number(r.fiedler_eigenvalue)},
          {"fiedler_multiplicity", r.fiedler_multiplicity},
          {"fiedler_support", indices(r.fiedler_support)},
          {"lambda1", number(r.closed_form.lambda1)},
          {"max_eigenvalue_deviation", number(r.max_eigenvalue_deviation)},
          {"n", r.n},
          {"normalization", number(r.normalization)},
          {"passed", r.passed()},
          {"shape_matches", r.shape_matches},
          {"spectrum_matches", r.spectrum_matches},
          {"support_matches", r.support_matches},
          {"tol", number(r.tol)},
          {"y1", number(r.closed_form.roots.y1)},
          {"y2", number(r.closed_form.roots.y2)},
          {"y3", number(r.closed_form.roots.y3)},
          {"zero_set", vertex_set(r.zero_set)},
          {"zero_set_matches", r.zero_set_matches}};
}

Json lift(const LiftResult& r) {
  return {{"eigenvalue", number(r.eigenvalue)},
          {"eigenvector", signal(r.eigenvector.values())},
          {"graph", graph(r.graph)},
          {"residual", number(r.residual)}};
}

Json harness(const HarnessReport& r) {
  Json instances = Json::array();
  for (const auto& i : r.instances) {
    instances.push_back({{"basis_dependent", i.basis_dependent},
                         {"bound_holds", i.bound_holds},
                         {"contained_balls", i.contained_balls},
                         {"fiedler_multiplicity", i.fiedler_multiplicity},
                         {"max_ball_size", i.max_ball_size},
                         {"params", i.params},
                         {"tol", number(i.tol)},
                         {"vertex_count", i.vertex_count}});
  }
  return {{"consistent", r.consistent}, {"family", r.family}, {"instances", instances}, {"planar", r.planar}};
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace vertexfreq::report
