#pragma once

#include <atomic>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include <cblas.h>
#include <lapacke.h>

namespace f2ent {

/// Number of dense Hermitian eigensolves performed so far in this process.
/// Lets tests assert structurally that a code path never diagonalizes.
inline std::atomic<std::uint64_t>& eigensolve_count() {
  static std::atomic<std::uint64_t> count{0};
  return count;
}

/// G = A A^dagger (Hermitian), via a rank-k update on the lower triangle.
inline Eigen::MatrixXcd gram(const Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  const int k = static_cast<int>(a.cols());
  Eigen::MatrixXcd g(n, n);
  cblas_zherk(CblasColMajor, CblasLower, CblasNoTrans, n, k, 1.0, a.data(), n,
              0.0, g.data(), n);
  g.triangularView<Eigen::StrictlyUpper>() =
      g.triangularView<Eigen::StrictlyLower>().adjoint();
  for (int i = 0; i < n; ++i) g(i, i) = std::real(g(i, i));
  return g;
}

/// C = A B^dagger.
inline Eigen::MatrixXcd product_adjoint(const Eigen::MatrixXcd& a,
                                        const Eigen::MatrixXcd& b) {
  if (a.cols() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument("product_adjoint: shape mismatch");
  }
  const int n = static_cast<int>(a.rows());
  const int k = static_cast<int>(a.cols());
  Eigen::MatrixXcd c(n, n);
  const std::complex<double> one(1.0, 0.0), zero(0.0, 0.0);
  cblas_zgemm(CblasColMajor, CblasNoTrans, CblasConjTrans, n, n, k, &one,
              a.data(), n, b.data(), n, &zero, c.data(), n);
  return c;
}

/// Ascending eigenvalues of a Hermitian matrix (values only, divide-and-conquer).
inline Eigen::VectorXd hermitian_eigenvalues(Eigen::MatrixXcd h) {
  const int n = static_cast<int>(h.rows());
  if (h.cols() != n) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  }
  eigensolve_count().fetch_add(1, std::memory_order_relaxed);
  Eigen::VectorXd w(n);
  const int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, 'N', 'L', n,
      reinterpret_cast<lapack_complex_double*>(h.data()), n, w.data());
  if (info != 0) {
    throw std::runtime_error("zheevd failed, info=" + std::to_string(info));
  }
  return w;
}

}  // namespace f2ent
