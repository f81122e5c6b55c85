#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "vertexfreq/signal.hpp"
#include "vertexfreq/spectral.hpp"

namespace vertexfreq {

// Operators on signals relative to a fixed eigenbasis Phi. Throughout,
// N = b.size(), phi_k(n) = b.entry(n, k) and f^(k) = <f, phi_k>.

/// f^(k) = sum_n f(n) conj(phi_k(n)).
SpectralSignal gft(const EigenBasis& b, const Signal& f);

/// f(n) = sum_k s(k) phi_k(n).
Signal igft(const EigenBasis& b, const SpectralSignal& s);

/// (f * g)(n) = sum_k f^(k) g^(k) phi_k(n).
Signal convolve(const EigenBasis& b, const Signal& f, const Signal& g);

/// (M_k f)(n) = sqrt(N) f(n) phi_k(n).
Signal modulate(const EigenBasis& b, std::size_t k, const Signal& f);

/// (T_i f)(n) = sqrt(N) sum_k f^(k) conj(phi_k(i)) phi_k(n).
Signal translate(const EigenBasis& b, std::size_t i, const Signal& f);

/// T_i as a dense matrix: sqrt(N) Phi diag(conj(phi_k(i))) Phi^*.
Eigen::MatrixXcd translation_matrix(const EigenBasis& b, std::size_t i);

/// Default zero test for phi_k(i): 1e-8 * sqrt(N).
double default_vanishing_tolerance(const EigenBasis& b);

struct TranslationAnalysis {
  std::size_t vertex = 0;
  std::size_t rank = 0;
  std::vector<std::size_t> vanishing_indices;  // k with |phi_k(i)| <= tol
  bool invertible = false;
  bool unitary = false;
  double tol = 0.0;
  // 1 / (sqrt(N) min_k |phi_k(i)|); infinite when not invertible.
  double condition = 0.0;
};

/// Rank, null space and unitarity of T_i. The eigenvectors listed in
/// vanishing_indices form an orthonormal basis of ker T_i.
TranslationAnalysis translation_analysis(const EigenBasis& b, std::size_t i,
                                         std::optional<double> tol = std::nullopt);

struct TranslationInverse {
  Eigen::MatrixXcd matrix;  // (1/sqrt(N)) Phi diag(1 / conj(phi_k(i))) Phi^*
  double condition = 0.0;   // kappa = max_k 1 / (sqrt(N) |phi_k(i)|)
};

/// Explicit inverse of T_i. Throws NotInvertible naming the vanishing
/// eigenvector indices.
TranslationInverse translation_inverse(const EigenBasis& b, std::size_t i,
                                       std::optional<double> tol = std::nullopt);

/// Operator acting diagonally in the spectral domain: (Af)^(k) = a(k) f^(k).
struct FourierMultiplier {
  Eigen::VectorXcd symbol;
};

Signal apply_multiplier(const EigenBasis& b, const FourierMultiplier& m, const Signal& f);

/// Symbol 1 / a(k). Throws NonInvertibleSymbol listing k with |a(k)| <= tol.
FourierMultiplier invert_multiplier(const FourierMultiplier& m, double tol);

/// Symbol sqrt(N) conj(phi_k(i)), whose multiplier is T_i.
FourierMultiplier translation_symbol(const EigenBasis& b, std::size_t i);

/// Symbol lambda_k, whose multiplier is the Laplacian.
FourierMultiplier laplacian_symbol(const EigenBasis& b);

/// The full product table i . j with T_i T_j = T_{i . j}.
struct SemigroupTable {
  std::vector<std::vector<std::size_t>> table;
};

/// First pair (row-major order) whose product sqrt(N) phi_k(i) phi_k(j)
/// matches no vertex row phi_k(l).
struct FailureWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  Eigen::VectorXcd product;  // indexed by k
};

using SemigroupResult = std::variant<SemigroupTable, FailureWitness>;

/// Exhaustive search, O(N^3) per pair row: for each (i, j) finds the smallest
/// l with max_k |sqrt(N) phi_k(i) phi_k(j) - phi_k(l)| <= tol.
SemigroupResult semigroup_table(const EigenBasis& b, double tol = 1e-9);

/// Evaluates (T_{a_K} ... T_{a_1} f)(a_0) for the tuple (a_0, ..., a_K) and for
/// its permutation beta_j = tuple[permutation[j]], and reports agreement
/// within 1e-9. Requires a real basis; throws PreconditionFailed otherwise.
bool translation_composition_check(const EigenBasis& b, std::span<const std::size_t> alpha,
                                   std::size_t alpha0, const Signal& f,
                                   std::span<const std::size_t> permutation);

/// (T_{a_K} ... T_{a_1} f)(a_0).
Complex composed_translation_at(const EigenBasis& b, std::span<const std::size_t> alpha,
                                std::size_t alpha0, const Signal& f);

struct TranslationNormReport {
  double lower = 0.0;   // |f^(0)|
  double value = 0.0;   // |T_i f|_2
  double upper1 = 0.0;  // sqrt(N) max_k |phi_k(i)| |f|_2
  double upper2 = 0.0;  // sqrt(N) max_k |phi_k|_inf |f|_2
  bool ordered = false; // lower <= value <= upper1 <= upper2 within 1e-10
};

TranslationNormReport translation_norm_report(const EigenBasis& b, std::size_t i, const Signal& f);

}  // namespace vertexfreq
