#pragma once

#include <cmath>
#include <cstddef>

// Every numerical threshold the library uses lives here.
namespace vertexfreq::tol {

// Columns of an eigenbasis must satisfy |Phi^* Phi - I|_max below this.
inline constexpr double kOrthonormality = 1e-10;

// Eigenpair residual |L v - lambda v|_2 relative to max(1, lambda).
inline constexpr double kEigenResidual = 1e-9;

// Eigenvalues may dip below zero by at most this much.
inline constexpr double kNegativeEigenvalue = 1e-10;

// Consecutive eigenvalues closer than kDegeneracyGap * max(1, |lambda|) form
// one degenerate cluster.
inline constexpr double kDegeneracyGap = 1e-8;

// The first entry of magnitude above this decides an eigenvector's sign.
inline constexpr double kSignEntry = 1e-8;

// Pivot threshold when canonicalising a degenerate eigenspace.
inline constexpr double kClusterPivot = 1e-8;

// |phi_k(i)| <= kVanishingScale * sqrt(N) counts as phi_k(i) = 0.
inline constexpr double kVanishingScale = 1e-8;

inline double default_vanishing(std::size_t n) {
  return kVanishingScale * std::sqrt(static_cast<double>(n));
}

// Sign partitions treat |f(i)| <= kPartitionScale * |f|_inf as zero.
inline constexpr double kPartitionScale = 1e-8;

// Default for "lambda_1 is positive" when extracting a Fiedler vector.
inline constexpr double kConnectivity = 1e-8;

// Constant-ball scans flag variation below kFlatBallScale * |f|_inf.
inline constexpr double kFlatBallScale = 1e-11;

}  // namespace vertexfreq::tol
