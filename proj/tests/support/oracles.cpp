#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace oracle {

using vertexfreq::Edge;

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

namespace {

bool connected(const Graph& g) {
  const auto d = floyd_warshall(g);
  for (const auto& row : d) {
    for (std::size_t x : row) {
      if (x == std::numeric_limits<std::size_t>::max()) return false;
    }
  }
  return true;
}

}  // namespace

Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  for (std::uint64_t attempt = 0; attempt < 20; ++attempt) {
    Graph g = erdos_renyi(n, p, seed * 1000003 + attempt);
    if (connected(g)) return g;
  }
  Graph g = erdos_renyi(n, p, seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(order[i - 1], order[i]);
  return Graph(n, edges);
}

std::vector<std::vector<std::size_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] != inf && d[k][j] != inf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

Eigen::MatrixXd dense_laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    l(u, u) += 1.0;
    l(v, v) += 1.0;
    l(u, v) -= 1.0;
    l(v, u) -= 1.0;
  }
  return l;
}

Eigen::VectorXd reference_eigenvalues(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_laplacian(g));
  return solver.eigenvalues();
}

std::size_t elimination_rank(Eigen::MatrixXcd m, double tol) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::size_t rank = 0;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (std::abs(m(i, c)) > std::abs(m(pivot, c))) pivot = i;
    }
    if (std::abs(m(pivot, c)) <= tol) continue;
    m.row(r).swap(m.row(pivot));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      const std::complex<double> factor = m(i, c) / m(r, c);
      m.row(i) -= factor * m.row(r);
    }
    ++r;
    ++rank;
  }
  return rank;
}

Eigen::VectorXcd direct_convolution(const Eigen::MatrixXcd& phi, const Eigen::VectorXcd& f,
                                    const Eigen::VectorXcd& g) {
  const Eigen::Index n = phi.rows();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    std::complex<double> fk = 0.0;
    std::complex<double> gk = 0.0;
    for (Eigen::Index v = 0; v < n; ++v) {
      fk += f(v) * std::conj(phi(v, k));
      gk += g(v) * std::conj(phi(v, k));
    }
    for (Eigen::Index x = 0; x < n; ++x) out(x) += fk * gk * phi(x, k);
  }
  return out;
}

Eigen::VectorXcd random_signal(std::size_t n, std::mt19937_64& rng, bool complex_valued) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = gauss(rng);
    v(i) = {re, complex_valued ? gauss(rng) : 0.0};
  }
  return v;
}

Eigen::MatrixXd hadamard12() {
  static const int rows[12][12] = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},         {1, -1, 1, -1, 1, 1, 1, -1, -1, -1, 1, -1},
      {1, -1, -1, 1, -1, 1, 1, 1, -1, -1, -1, 1},    {1, 1, -1, -1, 1, -1, 1, 1, 1, -1, -1, -1},
      {1, -1, 1, -1, -1, 1, -1, 1, 1, 1, -1, -1},    {1, -1, -1, 1, -1, -1, 1, -1, 1, 1, 1, -1},
      {1, -1, -1, -1, 1, -1, -1, 1, -1, 1, 1, 1},    {1, 1, -1, -1, -1, 1, -1, -1, 1, -1, 1, 1},
      {1, 1, 1, -1, -1, -1, 1, -1, -1, 1, -1, 1},    {1, 1, 1, 1, -1, -1, -1, 1, -1, -1, 1, -1},
      {1, -1, 1, 1, 1, -1, -1, -1, 1, -1, -1, 1},    {1, 1, -1, 1, 1, 1, -1, -1, -1, 1, -1, -1},
  };
  Eigen::MatrixXd h(12, 12);
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) h(i, j) = rows[i][j];
  }
  return h;
}

std::array<int, 12> hadamard12_printed_product() { return {1, -1, 1, -1, -1, 1, 1, -1, 1, 1, -1, -1}; }

}  // namespace oracle
