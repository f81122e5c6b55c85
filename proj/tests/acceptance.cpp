// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Oracles live in support/oracles.cpp.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "vertexfreq/fiedler.hpp"
#include "vertexfreq/generators.hpp"
#include "vertexfreq/harness.hpp"
#include "vertexfreq/spectral.hpp"
#include "vertexfreq/vertex_frequency.hpp"

using namespace vertexfreq;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

char buf[256];

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// N in [2, 12], density spread over [0.2, 0.7].
Graph corpus_graph(std::uint64_t seed, std::size_t max_n) {
  const std::size_t n = 2 + seed % (max_n - 1);
  const double p = 0.2 + 0.5 * static_cast<double>((seed * 37) % 100) / 100.0;
  return oracle::random_connected(n, p, seed);
}

Verdict barren_spectrum() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (std::size_t n = 3; n <= 20; ++n) {
    const EigenBasis b = eigendecompose(barren(n).graph);
    const std::vector<double> expected = barren_closed_spectrum(n).sorted_values();
    v.require(same_multiset(b.eigenvalues(), expected, 1e-8), fmt("N=%zu spectrum mismatch", n));
    for (std::size_t k = 0; k < expected.size(); ++k) worst = std::max(worst, std::abs(b.eigenvalue(k) - expected[k]));
  }
  const BarrenSpectrum s3 = barren_closed_spectrum(3);
  const double y1_err = std::abs(s3.roots.y1 - 2.0);
  const double l1_err = std::abs(s3.lambda1 - (3.0 - std::sqrt(3.0)));
  const double l1_computed_err = std::abs(eigendecompose(barren(3).graph).eigenvalue(1) - (3.0 - std::sqrt(3.0)));
  v.require(y1_err <= 1e-10, fmt("y1(3) off by %.3g", y1_err));
  v.require(l1_err <= 1e-10 && l1_computed_err <= 1e-10, fmt("lambda1(3) off by %.3g", std::max(l1_err, l1_computed_err)));
  const double elapsed = seconds_since(t0);
  v.require(elapsed < 10.0, fmt("took %.2f s", elapsed));
  if (v.ok) {
    v.detail = fmt("max |dev| %.2g, |y1-2| %.2g, |lambda1-(3-sqrt3)| %.2g, %.3f s", worst, y1_err,
                   std::max(l1_err, l1_computed_err), elapsed);
  }
  return v;
}

Verdict fiedler_support() {
  Verdict v;
  double worst_norm = 0.0;
  for (std::size_t n = 3; n <= 20; ++n) {
    const BarrenGraph bg = barren(n);
    const BarrenLayout& lay = bg.layout;
    const FiedlerResult f = fiedler(eigendecompose(bg.graph));
    const Eigen::VectorXd phi = f.vector.real();
    std::vector<Vertex> support;
    for (Vertex x = 0; x < bg.graph.vertex_count(); ++x) {
      if (std::abs(phi(static_cast<Eigen::Index>(x))) > 1e-6) support.push_back(x);
    }
    const std::vector<Vertex> expected{n + 1, n + 2, n + 3, n + 4, n + 5, n + 6};
    v.require(support == expected, fmt("N=%zu support differs", n));
    std::vector<Vertex> zero(lay.v(1).begin(), lay.v(1).end());
    zero.push_back(n);
    v.require(partition(f.vector).zero.members() == zero, fmt("N=%zu V0 differs", n));
    const double a = phi(static_cast<Eigen::Index>(n + 1));
    const double b = phi(static_cast<Eigen::Index>(n + 5));
    const double norm_err = std::abs(4 * a * a + 2 * b * b - 1.0);
    worst_norm = std::max(worst_norm, norm_err);
    v.require(norm_err <= 1e-9, fmt("N=%zu 4a^2+2b^2 off by %.3g", n, norm_err));
  }
  if (v.ok) v.detail = fmt("N=3..20, max |4a^2+2b^2-1| %.2g", worst_norm);
  return v;
}

Verdict translation_invertibility() {
  Verdict v;
  std::size_t invertible = 0, singular = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = corpus_graph(seed, 12);
    const EigenBasis b = eigendecompose(g);
    const auto n = static_cast<Eigen::Index>(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      const TranslationAnalysis a = translation_analysis(b, i);
      const Eigen::MatrixXcd t = translation_matrix(b, i);
      const std::size_t rank = oracle::elimination_rank(t, 1e-7);
      v.require(a.rank == rank, fmt("seed %llu vertex %zu: rank %zu vs %zu", (unsigned long long)seed, i, a.rank, rank));
      if (a.invertible) {
        ++invertible;
        const TranslationInverse inv = translation_inverse(b, i);
        const double err = (inv.matrix * t - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
        v.require(err < 1e-7 * inv.condition, fmt("seed %llu vertex %zu: inverse error %.3g", (unsigned long long)seed, i, err));
      } else {
        ++singular;
        for (std::size_t k : a.vanishing_indices) {
          const double r = (t * b.vectors().col(static_cast<Eigen::Index>(k))).norm();
          v.require(r < 1e-7, fmt("seed %llu vertex %zu: null vector residual %.3g", (unsigned long long)seed, i, r));
        }
      }
    }
  }
  if (v.ok) v.detail = fmt("200 graphs, %zu invertible and %zu singular translations", invertible, singular);
  return v;
}

Verdict semigroup_hadamard() {
  Verdict v;
  for (std::size_t n = 3; n <= 12; ++n) {
    const SemigroupResult r = semigroup_table(dft_basis(n));
    const auto* t = std::get_if<SemigroupTable>(&r);
    v.require(t != nullptr, fmt("dft(%zu) not closed", n));
    if (t == nullptr) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) v.require(t->table[i][j] == (i + j) % n, fmt("dft(%zu) table entry", n));
    }
  }

  const Eigen::MatrixXd phi = oracle::hadamard12().transpose() / std::sqrt(12.0);
  std::vector<double> values(12, 12.0);
  values[0] = 0.0;
  const EigenBasis h12(values, phi.cast<Complex>(), Field::kReal, complete(12));
  const SemigroupResult r = semigroup_table(h12);
  const auto* w = std::get_if<FailureWitness>(&r);
  v.require(w != nullptr, "order-12 Hadamard reported closed");
  if (w != nullptr) {
    v.require(w->i == 1 && w->j == 2, fmt("witness at (%zu,%zu), expected (1,2)", w->i, w->j));
    const auto printed = oracle::hadamard12_printed_product();
    for (Eigen::Index k = 0; k < 12; ++k) {
      v.require(std::abs(w->product(k) - printed[static_cast<std::size_t>(k)] / std::sqrt(12.0)) < 1e-12,
                "witness product differs from the printed vector");
    }
  }

  double worst = 0.0;
  for (std::size_t k = 1; k <= 3; ++k) {
    const EigenBasis b = sylvester_hadamard_basis(k);
    const auto n = static_cast<Eigen::Index>(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      const Eigen::MatrixXcd t = translation_matrix(b, i);
      const double err = (t.adjoint() * t - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
      worst = std::max(worst, err);
      v.require(err <= 1e-10 && translation_analysis(b, i).unitary, fmt("sylvester(%zu) T_%zu not unitary", k, i));
    }
  }
  if (v.ok) v.detail = fmt("dft n=3..12 tables, H12 witness at (1,2), sylvester max |T*T-I| %.2g", worst);
  return v;
}

Verdict parseval_algebra() {
  Verdict v;
  std::mt19937_64 rng(2024);
  double parseval = 0.0, algebra = 0.0;
  for (std::uint64_t trial = 0; trial < 500; ++trial) {
    const std::size_t n = 3 + trial % 10;
    const EigenBasis b = trial % 5 == 0 ? dft_basis(n) : eigendecompose(oracle::random_connected(n, 0.4, trial + 10000));
    const Signal f(oracle::random_signal(n, rng, true));
    parseval = std::max(parseval, std::abs(gft(b, f).norm() - f.norm()));
    if (trial % 5 != 0) continue;
    const Signal g(oracle::random_signal(n, rng, true));
    const Signal h(oracle::random_signal(n, rng, true));
    const auto diff = [](const Signal& x, const Signal& y) { return (x.values() - y.values()).cwiseAbs().maxCoeff(); };
    algebra = std::max(algebra, diff(convolve(b, f, g), convolve(b, g, f)));
    algebra = std::max(algebra, diff(convolve(b, convolve(b, f, g), h), convolve(b, f, convolve(b, g, h))));
    const Signal gh(Eigen::VectorXcd(g.values() + h.values()));
    const Signal split(Eigen::VectorXcd(convolve(b, f, g).values() + convolve(b, f, h).values()));
    algebra = std::max(algebra, diff(convolve(b, f, gh), split));
    const std::size_t i = trial % n;
    algebra = std::max(algebra, diff(translate(b, i, convolve(b, f, g)), convolve(b, translate(b, i, f), g)));
  }
  v.require(parseval <= 1e-12, fmt("Parseval gap %.3g", parseval));
  v.require(algebra <= 1e-10, fmt("convolution algebra gap %.3g", algebra));

  std::size_t identities = 0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + trial % 9;
    const EigenBasis b = eigendecompose(oracle::random_connected(n, 0.4, trial + 20000));
    const Signal f(oracle::random_signal(n, rng, false));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::size_t> alpha(1 + trial % 4);
    for (auto& a : alpha) a = pick(rng);
    const std::size_t alpha0 = pick(rng);
    std::vector<std::size_t> perm(alpha.size() + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const bool holds = translation_composition_check(b, alpha, alpha0, f, perm);
    identities += holds;
    v.require(holds, fmt("permutation identity failed on trial %llu", (unsigned long long)trial));
  }
  if (v.ok) {
    v.detail = fmt("500 signals, Parseval gap %.2g, algebra gap %.2g, %zu/100 permutation identities", parseval,
                   algebra, identities);
  }
  return v;
}

Verdict fiedler_geometry() {
  Verdict v;
  std::size_t eigenvectors = 0, max_distance = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 3 + seed % 14;
    const Graph g = oracle::random_connected(n, 0.15 + 0.05 * double(seed % 10), seed + 30000);
    const EigenBasis b = eigendecompose(g);
    const FiedlerResult f = fiedler(b);
    const VertexPartition p = partition(f.vector);
    const std::size_t d = partition_distance_check(g, p);
    max_distance = std::max(max_distance, d);
    v.require(d <= 2, fmt("seed %llu: d(V+,V-) = %zu", (unsigned long long)seed, d));
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (b.eigenvalue(k) <= 1e-8) continue;
      ++eigenvectors;
      const Signal phi = b.vector(k);
      v.require(constant_ball_scan(g, phi, partition(phi)).empty(),
                fmt("seed %llu: flat ball for eigenvector %zu", (unsigned long long)seed, k));
    }
  }
  if (v.ok) v.detail = fmt("300 graphs, max d(V+,V-) = %zu, %zu eigenvectors scanned", max_distance, eigenvectors);
  return v;
}

Verdict planar_harness() {
  Verdict v;
  std::size_t instances = 0;
  std::vector<std::pair<std::string, std::vector<std::vector<std::size_t>>>> sweeps(5);
  sweeps[0].first = "path";
  for (std::size_t n = 2; n <= 20; ++n) sweeps[0].second.push_back({n});
  sweeps[1].first = "cycle";
  for (std::size_t n = 3; n <= 20; ++n) sweeps[1].second.push_back({n});
  sweeps[2].first = "tree";
  for (std::size_t seed = 0; seed < 100; ++seed) sweeps[2].second.push_back({2 + seed % 19, seed});
  sweeps[3].first = "grid";
  for (std::size_t r = 1; r <= 6; ++r) {
    for (std::size_t c = 2; c <= 6; ++c) sweeps[3].second.push_back({r, c});
  }
  sweeps[4].first = "ladder";
  for (std::size_t n = 3; n <= 7; n += 2) {
    for (std::size_t m = 2; m <= 5; ++m) sweeps[4].second.push_back({n, m});
  }
  for (const auto& [family, params] : sweeps) {
    const HarnessReport r = planar_family_harness(family, params);
    instances += r.instances.size();
    v.require(r.planar && r.consistent, family + ": a zero-set ball of size >= 4");
  }

  const HarnessReport l33 = planar_family_harness("ladder", {{3, 3}});
  v.require(l33.instances[0].contained_balls == 1 && l33.instances[0].max_ball_size == 3,
            "Ladder(3,3) does not report exactly one ball of size 3");

  std::vector<std::vector<std::size_t>> controls;
  for (std::size_t n = 3; n <= 10; ++n) controls.push_back({n});
  const HarnessReport control = planar_family_harness("barren", controls);
  for (const auto& inst : control.instances) {
    v.require(inst.max_ball_size == inst.params[0] + 1, fmt("barren(%zu) max ball %zu", inst.params[0], inst.max_ball_size));
  }
  v.require(control.consistent, "barren control did not exceed the bound");
  if (v.ok) v.detail = fmt("%zu planar instances bounded by 3, Ladder(3,3) one ball, barren(3..10) ball N+1", instances);
  return v;
}

Verdict lifting() {
  Verdict v;
  const double h = 1.0 / std::sqrt(2.0);
  const Signal p3(std::vector<double>{h, 0.0, -h});
  const std::vector<LiftComponent> comps{{path(3), 1.0, p3}, {path(3), 1.0, p3}};
  const std::vector<CrossEdge> edges{{0, 1, 1, 1}};
  const LiftResult lifted = lift_common_eigenvector(comps, edges);
  v.require(lifted.eigenvalue == 1.0 && lifted.residual < 1e-12, fmt("two-P3 residual %.3g", lifted.residual));
  const double lambda1 = eigendecompose(lifted.graph).eigenvalue(1);
  v.require(lambda1 < 1.0, fmt("lambda_1(union) = %.6f", lambda1));

  double worst = 0.0;
  for (std::size_t n = 3; n <= 10; ++n) {
    const Graph s = star(n);
    Eigen::MatrixXcd span(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n - 1));
    for (std::size_t leaf = 1; leaf < n; ++leaf) {
      const LiftResult r =
          extend_subgraph_eigenvector(s, VertexSet(n + 1, {0, leaf, n}), 1.0, Signal(std::vector<double>{h, -h, 0.0}));
      worst = std::max(worst, r.residual);
      v.require(r.residual < 1e-12, fmt("star(%zu) extension residual %.3g", n, r.residual));
      span.col(static_cast<Eigen::Index>(leaf - 1)) = r.eigenvector.values();
    }
    v.require(oracle::elimination_rank(span, 1e-9) == n - 1, fmt("star(%zu) extensions not independent", n));
    v.require(multiplicity(eigendecompose(s), 1.0, 1e-8) == n - 1, fmt("star(%zu) multiplicity of 1", n));
  }
  if (v.ok) {
    v.detail = fmt("two-P3 residual %.2g, lambda_1(union) %.6f; star(3..10) multiplicity N-1, max residual %.2g",
                   lifted.residual, lambda1, worst);
  }
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {"1 barren spectrum", barren_spectrum},       {"2 barren Fiedler support", fiedler_support},
      {"3 translation invertibility", translation_invertibility},
      {"4 semigroup and Hadamard", semigroup_hadamard}, {"5 Parseval and algebra", parseval_algebra},
      {"6 Fiedler geometry", fiedler_geometry},     {"7 planar harness", planar_harness},
      {"8 lifting", lifting},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failures += !v.ok;
    std::printf("%s  %-30s %s\n", v.ok ? "PASS" : "FAIL", c.name, v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", int(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
