#pragma once

#include <Eigen/Dense>

namespace vertexfreq {

struct SymmetricEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column k pairs with values(k)
  int sweeps = 0;
};

/// Cyclic Jacobi eigensolver for dense real symmetric matrices.
///
/// Single-threaded and deterministic: the same input always yields the same
/// bits. Eigenvalues are returned ascending; ties keep the order in which the
/// diagonal settled. Only the upper triangle of `a` is read.
SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& a, int max_sweeps = 100);

}  // namespace vertexfreq
