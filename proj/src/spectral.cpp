#include "vertexfreq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "vertexfreq/errors.hpp"
#include "vertexfreq/generators.hpp"
#include "vertexfreq/jacobi.hpp"
#include "vertexfreq/tolerances.hpp"

namespace vertexfreq {

namespace {

__extension__ typedef __int128 Int128;

bool same_cluster(double lower, double upper) {
  return upper - lower < tol::kDegeneracyGap * std::max(1.0, std::abs(lower));
}

void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > tol::kSignEntry) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

// Rewrites the columns of `block` (an orthonormal basis of one eigenspace)
// into the echelon-orthonormal form described in eigendecompose().
void canonicalize_cluster(Eigen::Ref<Eigen::MatrixXd> block) {
  const Eigen::Index n = block.rows();
  const Eigen::Index m = block.cols();
  Eigen::MatrixXd rows = block.transpose();
  Eigen::Index next = 0;
  for (Eigen::Index col = 0; col < n && next < m; ++col) {
    Eigen::Index best = next;
    for (Eigen::Index r = next + 1; r < m; ++r) {
      if (std::abs(rows(r, col)) > std::abs(rows(best, col))) best = r;
    }
    if (std::abs(rows(best, col)) <= tol::kClusterPivot) continue;
    rows.row(next).swap(rows.row(best));
    for (Eigen::Index r = next + 1; r < m; ++r) {
      const double factor = rows(r, col) / rows(next, col);
      rows.row(r) -= factor * rows.row(next);
      rows(r, col) = 0.0;
    }
    ++next;
  }
  if (next < m) return;  // numerically rank-deficient; keep the solver's basis

  for (Eigen::Index j = m - 1; j >= 0; --j) {
    Eigen::VectorXd v = rows.row(j).transpose();
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index l = j + 1; l < m; ++l) v -= v.dot(block.col(l)) * block.col(l);
    }
    v.normalize();
    fix_sign(v);
    block.col(j) = v;
  }
}

}  // namespace

EigenBasis::EigenBasis(std::vector<double> eigenvalues, Eigen::MatrixXcd vectors, Field field,
                       std::optional<Graph> source_graph)
    : eigenvalues_(std::move(eigenvalues)),
      vectors_(std::move(vectors)),
      field_(field),
      source_(std::move(source_graph)) {
  const auto n = eigenvalues_.size();
  if (static_cast<std::size_t>(vectors_.rows()) != n || static_cast<std::size_t>(vectors_.cols()) != n) {
    throw DimensionMismatch(n, static_cast<std::size_t>(vectors_.rows()));
  }
  if (source_ && source_->vertex_count() != n) throw DimensionMismatch(n, source_->vertex_count());
  for (std::size_t k = 0; k < n; ++k) {
    if (eigenvalues_[k] < -tol::kNegativeEigenvalue) {
      throw InvalidArgument("eigenvalue " + std::to_string(k) + " is negative");
    }
    if (k > 0 && eigenvalues_[k] < eigenvalues_[k - 1]) {
      throw InvalidArgument("eigenvalues must be sorted ascending");
    }
  }
  if (field_ == Field::kReal && n > 0 && vectors_.imag().cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidArgument("real eigenbasis has complex entries");
  }
  const Eigen::MatrixXcd gram = vectors_.adjoint() * vectors_;
  const double ortho = n == 0 ? 0.0 : (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (ortho > tol::kOrthonormality) {
    throw InvalidArgument("eigenbasis columns are not orthonormal (error " + std::to_string(ortho) + ")");
  }
  if (source_) {
    const BasisCheck check = check_basis(vectors_, eigenvalues_, *source_);
    if (check.max_scaled_residual > tol::kEigenResidual) {
      throw InvalidArgument("eigenbasis does not diagonalise the source Laplacian (residual " +
                            std::to_string(check.max_scaled_residual) + ")");
    }
  }
}

Signal EigenBasis::vector(std::size_t k) const {
  if (k >= size()) throw InvalidArgument("eigenvector index " + std::to_string(k) + " out of range");
  return Signal(Eigen::VectorXcd(vectors_.col(static_cast<Eigen::Index>(k))));
}

BasisCheck check_basis(const Eigen::MatrixXcd& vectors, const std::vector<double>& eigenvalues,
                       const Graph& g) {
  BasisCheck out;
  const auto n = vectors.cols();
  if (n == 0) return out;
  const Eigen::MatrixXcd gram = vectors.adjoint() * vectors;
  out.orthonormality_error = (gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd lv = laplacian(g).cast<Complex>() * vectors;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double lambda = eigenvalues[static_cast<std::size_t>(k)];
    const double residual = (lv.col(k) - lambda * vectors.col(k)).norm();
    out.max_scaled_residual = std::max(out.max_scaled_residual, residual / std::max(1.0, lambda));
  }
  return out;
}

EigenBasis eigendecompose(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  SymmetricEigen eig = jacobi_eigen(laplacian(g));

  std::vector<double> values(eig.values.data(), eig.values.data() + n);
  for (Eigen::Index start = 0; start < n;) {
    Eigen::Index stop = start + 1;
    while (stop < n && same_cluster(values[static_cast<std::size_t>(stop - 1)],
                                    values[static_cast<std::size_t>(stop)])) {
      ++stop;
    }
    if (stop - start == 1) {
      fix_sign(eig.vectors.col(start));
    } else {
      canonicalize_cluster(eig.vectors.middleCols(start, stop - start));
    }
    start = stop;
  }
  // Round-off can push a zero eigenvalue to -1e-16; the basis invariant only
  // tolerates that much, but report a clean zero.
  for (double& v : values) {
    if (v < 0.0 && v > -tol::kNegativeEigenvalue) v = 0.0;
  }
  return EigenBasis(std::move(values), eig.vectors.cast<Complex>(), Field::kReal, g);
}

EigenBasis dft_basis(std::size_t n) {
  if (n < 3) throw InvalidArgument("dft_basis requires n >= 3, got " + std::to_string(n));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto fold = [n](std::size_t k) { return std::min(k, n - k); };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return fold(a) < fold(b); });

  const auto size = static_cast<Eigen::Index>(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::MatrixXcd phi(size, size);
  std::vector<double> eigenvalues(n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t k = order[col];
    eigenvalues[col] =
        2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(fold(k)) / static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
      // Reduce j*k mod n first so the angle stays in [0, 2 pi).
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      phi(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(col)) = std::polar(scale, angle);
    }
  }
  return EigenBasis(std::move(eigenvalues), std::move(phi), Field::kComplex, cycle(n));
}

Eigen::MatrixXd sylvester_hadamard(std::size_t k) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Ones(1, 1);
  for (std::size_t step = 0; step < k; ++step) {
    const Eigen::Index m = h.rows();
    Eigen::MatrixXd next(2 * m, 2 * m);
    next << h, h, h, -h;
    h = std::move(next);
  }
  return h;
}

EigenBasis sylvester_hadamard_basis(std::size_t k) {
  if (k < 1) throw InvalidArgument("sylvester_hadamard_basis requires k >= 1");
  if (k > 20) throw InvalidArgument("sylvester_hadamard_basis: order 2^" + std::to_string(k) + " is too large");
  const Eigen::MatrixXd h = sylvester_hadamard(k);
  const auto n = static_cast<std::size_t>(h.rows());
  std::vector<double> eigenvalues(n, static_cast<double>(n));
  eigenvalues[0] = 0.0;
  return EigenBasis(std::move(eigenvalues), (h / std::sqrt(static_cast<double>(n))).cast<Complex>(),
                    Field::kReal, complete(n));
}

bool is_hadamard_basis(const EigenBasis& b, double tol) {
  if (b.size() == 0) return false;
  const double target = 1.0 / std::sqrt(static_cast<double>(b.size()));
  return (b.vectors().cwiseAbs().array() - target).abs().maxCoeff() <= tol;
}

std::size_t multiplicity(const EigenBasis& b, double value, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("multiplicity tolerance must be positive");
  return static_cast<std::size_t>(std::count_if(b.eigenvalues().begin(), b.eigenvalues().end(),
                                                [&](double l) { return std::abs(l - value) <= tol; }));
}

bool same_multiset(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(std::abs(a[i] - b[i]) <= tol)) return false;
  }
  return true;
}

BarrenCubic barren_cubic(std::size_t n) {
  const auto x = static_cast<double>(n);
  return {-2.0 * x - 8.0, x * x + 10.0 * x + 15.0, -2.0 * x * x - 14.0 * x};
}

double barren_cubic_discriminant(std::size_t n) {
  const auto x = static_cast<Int128>(n);
  const Int128 c2 = -2 * x - 8;
  const Int128 c1 = x * x + 10 * x + 15;
  const Int128 c0 = -2 * x * x - 14 * x;
  const Int128 disc = 18 * c0 * c1 * c2 - 4 * c2 * c2 * c2 * c0 + c2 * c2 * c1 * c1 -
                      4 * c1 * c1 * c1 - 27 * c0 * c0;
  return static_cast<double>(disc);
}

CubicRoots barren_cubic_roots(std::size_t n) {
  if (n < 3) throw InvalidArgument("barren cubic requires N >= 3, got " + std::to_string(n));
  if (n > 1000000) throw InvalidArgument("barren cubic: N too large for exact discriminant");
  CubicRoots out;
  out.discriminant = barren_cubic_discriminant(n);
  if (!(out.discriminant > 0.0)) {
    throw Error("barren cubic discriminant is not positive for N = " + std::to_string(n));
  }
  const BarrenCubic cubic = barren_cubic(n);
  // Depressed form t^3 + p t + q with lambda = t - c2 / 3.
  const double shift = -cubic.c2 / 3.0;
  const double p = cubic.c1 - cubic.c2 * cubic.c2 / 3.0;
  const double q = 2.0 * cubic.c2 * cubic.c2 * cubic.c2 / 27.0 - cubic.c2 * cubic.c1 / 3.0 + cubic.c0;
  const double radius = 2.0 * std::sqrt(-p / 3.0);
  const double arg = std::clamp(3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p), -1.0, 1.0);
  const double base = std::acos(arg) / 3.0;
  std::array<double, 3> roots{};
  for (int k = 0; k < 3; ++k) {
    double y = shift + radius * std::cos(base - 2.0 * std::numbers::pi * k / 3.0);
    const double slope = cubic.derivative(y);
    if (slope != 0.0) y -= cubic(y) / slope;
    roots[static_cast<std::size_t>(k)] = y;
  }
  std::sort(roots.begin(), roots.end());
  out.y1 = roots[0];
  out.y2 = roots[1];
  out.y3 = roots[2];
  return out;
}

std::vector<double> BarrenSpectrum::sorted_values() const {
  std::vector<double> values;
  for (const auto& [value, count] : expected_multiset) values.insert(values.end(), count, value);
  std::sort(values.begin(), values.end());
  return values;
}

BarrenSpectrum barren_closed_spectrum(std::size_t n) {
  if (n < 3) throw InvalidArgument("barren spectrum requires N >= 3, got " + std::to_string(n));
  BarrenSpectrum out;
  out.n = n;
  const auto x = static_cast<double>(n);
  const double m = x * x - 2.0 * x + 9.0;
  const double root_m = std::sqrt(m);
  out.lambda1 = 0.5 * (x + 3.0 - root_m);
  out.lambda_top_pair = 0.5 * (x + 3.0 + root_m);
  out.fiedler_a = 0.5 * std::sqrt((m - (x - 1.0) * root_m) / (2.0 * m));
  out.fiedler_b = 0.5 * std::sqrt((m + (x - 1.0) * root_m) / m);
  out.roots = barren_cubic_roots(n);
  out.expected_multiset = {{0.0, 1},
                           {out.lambda1, 1},
                           {out.roots.y1, 1},
                           {5.0, n - 1},
                           {out.roots.y2, 1},
                           {x + 1.0, 2},
                           {out.lambda_top_pair, 1},
                           {out.roots.y3, 1}};
  return out;
}

}  // namespace vertexfreq
