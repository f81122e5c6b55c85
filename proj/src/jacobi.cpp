#include "vertexfreq/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "vertexfreq/errors.hpp"

namespace vertexfreq {

namespace {

double off_diagonal_norm2(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  for (Eigen::Index q = 1; q < a.cols(); ++q) {
    for (Eigen::Index p = 0; p < q; ++p) sum += a(p, q) * a(p, q);
  }
  return 2.0 * sum;
}

}  // namespace

SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& input, int max_sweeps) {
  if (input.rows() != input.cols()) {
    throw DimensionMismatch(static_cast<std::size_t>(input.rows()),
                            static_cast<std::size_t>(input.cols()));
  }
  const Eigen::Index n = input.rows();
  Eigen::MatrixXd a = input.selfadjointView<Eigen::Upper>();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  const double scale = std::max(a.norm(), 1e-300);
  const double target = std::numeric_limits<double>::epsilon() * scale;
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (std::sqrt(off_diagonal_norm2(a)) <= target) break;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Negligible relative to both diagonal entries: drop it after the
        // first few sweeps, when the diagonal is already meaningful.
        if (sweep > 3 && std::abs(apq) * 1e2 + std::abs(app) == std::abs(app) &&
            std::abs(apq) * 1e2 + std::abs(aqq) == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;

        for (Eigen::Index r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
  if (sweep == max_sweeps && std::sqrt(off_diagonal_norm2(a)) > 1e3 * target) {
    throw Error("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) + " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src);
    out.vectors.col(k) = v.col(src);
  }
  out.sweeps = sweep;
  return out;
}

}  // namespace vertexfreq
