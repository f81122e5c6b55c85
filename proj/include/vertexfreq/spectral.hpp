#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "vertexfreq/graph.hpp"
#include "vertexfreq/signal.hpp"

namespace vertexfreq {

enum class Field { kReal, kComplex };

/// A fixed orthonormal Laplacian eigenbasis Phi with eigenvalues
/// lambda_0 <= ... <= lambda_{N-1}; column k of vectors() is phi_k, so
/// entry(n, k) = phi_k(n).
///
/// Construction validates the invariants (orthonormal columns, ascending
/// non-negative eigenvalues, and eigenpair residuals when a source graph is
/// attached) and throws InvalidArgument when they fail.
class EigenBasis {
 public:
  EigenBasis(std::vector<double> eigenvalues, Eigen::MatrixXcd vectors, Field field,
             std::optional<Graph> source_graph = std::nullopt);

  std::size_t size() const noexcept { return eigenvalues_.size(); }
  Field field() const noexcept { return field_; }
  bool is_real() const noexcept { return field_ == Field::kReal; }

  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  double eigenvalue(std::size_t k) const { return eigenvalues_.at(k); }

  const Eigen::MatrixXcd& vectors() const noexcept { return vectors_; }
  Complex entry(std::size_t vertex, std::size_t k) const {
    return vectors_(static_cast<Eigen::Index>(vertex), static_cast<Eigen::Index>(k));
  }
  Signal vector(std::size_t k) const;

  const std::optional<Graph>& source_graph() const noexcept { return source_; }

 private:
  std::vector<double> eigenvalues_;
  Eigen::MatrixXcd vectors_;
  Field field_;
  std::optional<Graph> source_;
};

struct BasisCheck {
  double orthonormality_error = 0.0;  // |Phi^* Phi - I|_max
  double max_scaled_residual = 0.0;   // max_k |L phi_k - lambda_k phi_k| / max(1, lambda_k)
};

/// Measures how well `vectors`/`eigenvalues` diagonalise L(g).
BasisCheck check_basis(const Eigen::MatrixXcd& vectors, const std::vector<double>& eigenvalues,
                       const Graph& g);

/// Deterministic eigendecomposition of L(g).
///
/// Conventions that pin Phi down:
///  * eigenvalues ascending; consecutive values within
///    tol::kDegeneracyGap * max(1, |lambda|) form one degenerate cluster;
///  * inside a cluster the basis is rebuilt in echelon form: vectors are
///    ordered by their leading vertex, each vanishes on every vertex before
///    its leading one, and they are orthonormalised from the last to the
///    first so those zeros survive exactly. For eigenvalue 0 this yields the
///    normalised component indicators;
///  * every vector's first entry above tol::kSignEntry is positive.
EigenBasis eigendecompose(const Graph& g);

/// Unitary DFT basis of cycle(n): Phi(j, k) = exp(-2 pi i j k / n) / sqrt(n),
/// with columns reordered so the eigenvalues 2 - 2 cos(2 pi k / n) ascend
/// (k before n - k on ties). Requires n >= 3.
EigenBasis dft_basis(std::size_t n);

/// Sylvester Hadamard matrix of order 2^k (entries +-1, symmetric).
Eigen::MatrixXd sylvester_hadamard(std::size_t k);

/// H / sqrt(N) as an eigenbasis of complete(N), N = 2^k. Requires k >= 1.
EigenBasis sylvester_hadamard_basis(std::size_t k);

/// True iff every |Phi(j, k)| lies within tol of 1 / sqrt(N).
bool is_hadamard_basis(const EigenBasis& b, double tol);

/// Number of eigenvalues within tol of value. Requires tol > 0.
std::size_t multiplicity(const EigenBasis& b, double value, double tol);

/// Sorted-multiset comparison within an absolute tolerance.
bool same_multiset(std::vector<double> a, std::vector<double> b, double tol);

/// Monic cubic lambda^3 + c2 lambda^2 + c1 lambda + c0 whose roots are the
/// three full-support barren eigenvalues.
struct BarrenCubic {
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  double operator()(double x) const { return ((x + c2) * x + c1) * x + c0; }
  double derivative(double x) const { return (3.0 * x + 2.0 * c2) * x + c1; }
};

BarrenCubic barren_cubic(std::size_t n);

/// Discriminant 18 c0 c1 c2 - 4 c2^3 c0 + c2^2 c1^2 - 4 c1^3 - 27 c0^2 of the
/// barren cubic, evaluated exactly in integer arithmetic then rounded.
double barren_cubic_discriminant(std::size_t n);

struct CubicRoots {
  double y1 = 0.0;
  double y2 = 0.0;
  double y3 = 0.0;
  double discriminant = 0.0;
};

/// Roots y1 < y2 < y3 by the trigonometric method plus one Newton step each.
/// Requires N >= 3; throws Error if the discriminant is not positive.
CubicRoots barren_cubic_roots(std::size_t n);

/// Closed-form spectrum of barren(N).
struct BarrenSpectrum {
  std::size_t n = 0;
  double lambda1 = 0.0;         // (N + 3 - sqrt(N^2 - 2N + 9)) / 2
  double lambda_top_pair = 0.0;  // (N + 3 + sqrt(N^2 - 2N + 9)) / 2
  CubicRoots roots;
  // Fiedler amplitudes: +-a on V3/V4, +-b on V5/V6, with 4a^2 + 2b^2 = 1.
  double fiedler_a = 0.0;
  double fiedler_b = 0.0;
  std::vector<std::pair<double, std::size_t>> expected_multiset;  // (value, multiplicity)

  /// The multiset expanded and sorted ascending (N + 7 values).
  std::vector<double> sorted_values() const;
};

BarrenSpectrum barren_closed_spectrum(std::size_t n);

}  // namespace vertexfreq
