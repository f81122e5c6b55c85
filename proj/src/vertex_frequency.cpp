#include "vertexfreq/vertex_frequency.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "vertexfreq/errors.hpp"
#include "vertexfreq/tolerances.hpp"

namespace vertexfreq {

namespace {

void check_signal(const EigenBasis& b, const Signal& f) {
  if (f.size() != b.size()) throw DimensionMismatch(b.size(), f.size());
}

void check_vertex(const EigenBasis& b, std::size_t i) {
  if (i >= b.size()) {
    throw InvalidArgument("vertex " + std::to_string(i) + " out of range [0, " +
                          std::to_string(b.size()) + ")");
  }
}

double root_n(const EigenBasis& b) { return std::sqrt(static_cast<double>(b.size())); }

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

double resolve_tolerance(const EigenBasis& b, std::optional<double> tol) {
  const double value = tol.value_or(default_vanishing_tolerance(b));
  if (!(value > 0.0)) throw InvalidArgument("tolerance must be positive");
  return value;
}

// conj(phi_k(i)) for every k, i.e. the conjugated i-th row of Phi.
Eigen::VectorXcd conjugated_row(const EigenBasis& b, std::size_t i) {
  return b.vectors().row(idx(i)).adjoint();
}

}  // namespace

SpectralSignal gft(const EigenBasis& b, const Signal& f) {
  check_signal(b, f);
  return SpectralSignal(b.vectors().adjoint() * f.values());
}

Signal igft(const EigenBasis& b, const SpectralSignal& s) {
  if (s.size() != b.size()) throw DimensionMismatch(b.size(), s.size());
  return Signal(b.vectors() * s.coeffs());
}

Signal convolve(const EigenBasis& b, const Signal& f, const Signal& g) {
  check_signal(b, f);
  check_signal(b, g);
  const Eigen::VectorXcd product = gft(b, f).coeffs().cwiseProduct(gft(b, g).coeffs());
  return Signal(b.vectors() * product);
}

Signal modulate(const EigenBasis& b, std::size_t k, const Signal& f) {
  check_signal(b, f);
  if (k >= b.size()) throw InvalidArgument("modulation index " + std::to_string(k) + " out of range");
  return Signal(Eigen::VectorXcd(root_n(b) * f.values().cwiseProduct(b.vectors().col(idx(k)))));
}

Signal translate(const EigenBasis& b, std::size_t i, const Signal& f) {
  check_vertex(b, i);
  return apply_multiplier(b, translation_symbol(b, i), f);
}

Eigen::MatrixXcd translation_matrix(const EigenBasis& b, std::size_t i) {
  check_vertex(b, i);
  const Eigen::VectorXcd weights = conjugated_row(b, i);
  return root_n(b) * b.vectors() * weights.asDiagonal() * b.vectors().adjoint();
}

double default_vanishing_tolerance(const EigenBasis& b) { return tol::default_vanishing(b.size()); }

TranslationAnalysis translation_analysis(const EigenBasis& b, std::size_t i, std::optional<double> tol) {
  check_vertex(b, i);
  TranslationAnalysis out;
  out.vertex = i;
  out.tol = resolve_tolerance(b, tol);
  const double target = 1.0 / root_n(b);
  double min_magnitude = std::numeric_limits<double>::infinity();
  bool unit_amplitude = true;
  for (std::size_t k = 0; k < b.size(); ++k) {
    const double magnitude = std::abs(b.entry(i, k));
    min_magnitude = std::min(min_magnitude, magnitude);
    if (magnitude <= out.tol) out.vanishing_indices.push_back(k);
    if (std::abs(magnitude - target) > out.tol) unit_amplitude = false;
  }
  out.rank = b.size() - out.vanishing_indices.size();
  out.invertible = out.vanishing_indices.empty();
  out.unitary = out.invertible && unit_amplitude;
  out.condition = out.invertible ? 1.0 / (root_n(b) * min_magnitude)
                                 : std::numeric_limits<double>::infinity();
  return out;
}

TranslationInverse translation_inverse(const EigenBasis& b, std::size_t i, std::optional<double> tol) {
  const TranslationAnalysis analysis = translation_analysis(b, i, tol);
  if (!analysis.invertible) throw NotInvertible(i, analysis.vanishing_indices);
  const Eigen::VectorXcd weights = conjugated_row(b, i).cwiseInverse();
  TranslationInverse out;
  out.matrix = (1.0 / root_n(b)) * b.vectors() * weights.asDiagonal() * b.vectors().adjoint();
  out.condition = analysis.condition;
  return out;
}

Signal apply_multiplier(const EigenBasis& b, const FourierMultiplier& m, const Signal& f) {
  check_signal(b, f);
  if (static_cast<std::size_t>(m.symbol.size()) != b.size()) {
    throw DimensionMismatch(b.size(), static_cast<std::size_t>(m.symbol.size()));
  }
  return igft(b, SpectralSignal(m.symbol.cwiseProduct(gft(b, f).coeffs())));
}

FourierMultiplier invert_multiplier(const FourierMultiplier& m, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  std::vector<std::size_t> zeros;
  for (Eigen::Index k = 0; k < m.symbol.size(); ++k) {
    if (std::abs(m.symbol(k)) <= tol) zeros.push_back(static_cast<std::size_t>(k));
  }
  if (!zeros.empty()) throw NonInvertibleSymbol(std::move(zeros));
  return {m.symbol.cwiseInverse()};
}

FourierMultiplier translation_symbol(const EigenBasis& b, std::size_t i) {
  check_vertex(b, i);
  return {root_n(b) * conjugated_row(b, i)};
}

FourierMultiplier laplacian_symbol(const EigenBasis& b) {
  Eigen::VectorXcd symbol(idx(b.size()));
  for (std::size_t k = 0; k < b.size(); ++k) symbol(idx(k)) = b.eigenvalue(k);
  return {std::move(symbol)};
}

SemigroupResult semigroup_table(const EigenBasis& b, double tol) {
  const std::size_t n = b.size();
  const Eigen::MatrixXcd& phi = b.vectors();
  SemigroupTable result;
  result.table.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Eigen::RowVectorXcd product = root_n(b) * phi.row(idx(i)).cwiseProduct(phi.row(idx(j)));
      bool found = false;
      for (std::size_t l = 0; l < n && !found; ++l) {
        if ((product - phi.row(idx(l))).cwiseAbs().maxCoeff() <= tol) {
          result.table[i][j] = l;
          found = true;
        }
      }
      if (!found) return FailureWitness{i, j, product.transpose()};
    }
  }
  return result;
}

Complex composed_translation_at(const EigenBasis& b, std::span<const std::size_t> alpha,
                                std::size_t alpha0, const Signal& f) {
  check_vertex(b, alpha0);
  Signal current = f;
  for (std::size_t vertex : alpha) current = translate(b, vertex, current);
  return current[alpha0];
}

bool translation_composition_check(const EigenBasis& b, std::span<const std::size_t> alpha,
                                   std::size_t alpha0, const Signal& f,
                                   std::span<const std::size_t> permutation) {
  if (!b.is_real()) {
    throw PreconditionFailed("translation permutation identity requires real-valued eigenvectors");
  }
  check_signal(b, f);
  std::vector<std::size_t> tuple{alpha0};
  tuple.insert(tuple.end(), alpha.begin(), alpha.end());
  if (permutation.size() != tuple.size()) throw DimensionMismatch(tuple.size(), permutation.size());
  std::vector<bool> used(tuple.size(), false);
  std::vector<std::size_t> permuted(tuple.size());
  for (std::size_t j = 0; j < permutation.size(); ++j) {
    if (permutation[j] >= tuple.size() || used[permutation[j]]) {
      throw InvalidArgument("permutation is not a bijection of 0.." + std::to_string(tuple.size() - 1));
    }
    used[permutation[j]] = true;
    permuted[j] = tuple[permutation[j]];
  }
  const Complex lhs = composed_translation_at(b, alpha, alpha0, f);
  const Complex rhs = composed_translation_at(
      b, std::span<const std::size_t>(permuted).subspan(1), permuted[0], f);
  return std::abs(lhs - rhs) <= 1e-9;
}

TranslationNormReport translation_norm_report(const EigenBasis& b, std::size_t i, const Signal& f) {
  check_vertex(b, i);
  check_signal(b, f);
  TranslationNormReport out;
  out.lower = std::abs(gft(b, f)[0]);
  out.value = translate(b, i, f).norm();
  const double f_norm = f.norm();
  out.upper1 = root_n(b) * b.vectors().row(idx(i)).cwiseAbs().maxCoeff() * f_norm;
  out.upper2 = root_n(b) * b.vectors().cwiseAbs().maxCoeff() * f_norm;
  constexpr double kSlack = 1e-10;
  out.ordered = out.lower <= out.value + kSlack && out.value <= out.upper1 + kSlack &&
                out.upper1 <= out.upper2 + kSlack;
  return out;
}

}  // namespace vertexfreq
