#pragma once

// Test-side helpers. Everything here is computed independently of the
// library code it checks: no call into laplacian(), distances_from(),
// jacobi_eigen() or the vertex-frequency operators.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "vertexfreq/graph.hpp"

namespace oracle {

using vertexfreq::Graph;

/// G(n, p) with an explicit seed.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Resamples G(n, p) until connected, then falls back to adding a random
/// spanning path so the result is always connected.
Graph random_connected(std::size_t n, double p, std::uint64_t seed);

/// All-pairs hop distances; SIZE_MAX where unreachable.
std::vector<std::vector<std::size_t>> floyd_warshall(const Graph& g);

/// D - A built entry by entry from the edge list.
Eigen::MatrixXd dense_laplacian(const Graph& g);

/// Eigenvalues from Eigen's SelfAdjointEigenSolver.
Eigen::VectorXd reference_eigenvalues(const Graph& g);

/// Rank by Gaussian elimination with partial pivoting; pivots with
/// magnitude <= tol count as zero.
std::size_t elimination_rank(Eigen::MatrixXcd m, double tol);

/// (f * g)(x) = sum_k (sum_n f(n) conj phi_k(n)) (sum_m g(m) conj phi_k(m)) phi_k(x),
/// written out as explicit loops.
Eigen::VectorXcd direct_convolution(const Eigen::MatrixXcd& phi, const Eigen::VectorXcd& f,
                                    const Eigen::VectorXcd& g);

Eigen::VectorXcd random_signal(std::size_t n, std::mt19937_64& rng, bool complex_valued);

/// Order-12 Hadamard matrix, row by row, typed in independently of the library.
Eigen::MatrixXd hadamard12();

/// Entrywise product of columns 1 and 2 of hadamard12().
std::array<int, 12> hadamard12_printed_product();

}  // namespace oracle
