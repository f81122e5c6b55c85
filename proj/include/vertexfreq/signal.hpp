#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace vertexfreq {

using Complex = std::complex<double>;

/// Vertex-domain function f : V -> C.
class Signal {
 public:
  Signal() = default;
  explicit Signal(Eigen::VectorXcd values) : values_(std::move(values)) {}
  /// Any real or complex Eigen vector expression.
  template <typename Derived>
  explicit Signal(const Eigen::MatrixBase<Derived>& values) : values_(values.template cast<Complex>()) {}
  explicit Signal(const std::vector<double>& values)
      : Signal(Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()))) {}

  static Signal zeros(std::size_t n) { return Signal(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n))); }
  static Signal constant(std::size_t n, Complex value) {
    return Signal(Eigen::VectorXcd::Constant(static_cast<Eigen::Index>(n), value));
  }

  std::size_t size() const noexcept { return static_cast<std::size_t>(values_.size()); }
  Complex operator[](std::size_t i) const { return values_(static_cast<Eigen::Index>(i)); }
  const Eigen::VectorXcd& values() const noexcept { return values_; }

  /// True when every imaginary part is at most tol in magnitude.
  bool is_real(double tol = 0.0) const {
    return values_.size() == 0 || values_.imag().cwiseAbs().maxCoeff() <= tol;
  }
  Eigen::VectorXd real() const { return values_.real(); }

  double norm() const { return values_.norm(); }
  double max_abs() const { return values_.size() == 0 ? 0.0 : values_.cwiseAbs().maxCoeff(); }

 private:
  Eigen::VectorXcd values_;
};

/// Spectral coefficients f^(lambda_k), indexed by eigenvalue index k.
class SpectralSignal {
 public:
  SpectralSignal() = default;
  explicit SpectralSignal(Eigen::VectorXcd coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t size() const noexcept { return static_cast<std::size_t>(coeffs_.size()); }
  Complex operator[](std::size_t k) const { return coeffs_(static_cast<Eigen::Index>(k)); }
  const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }
  double norm() const { return coeffs_.norm(); }

 private:
  Eigen::VectorXcd coeffs_;
};

}  // namespace vertexfreq
