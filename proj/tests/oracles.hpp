#pragma once

// Reference implementations used only by the tests. Everything here is
// computed by a route disjoint from the library: explicit Fock pair basis,
// delta-rule annihilation, and Eigen's own eigensolver.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// One-particle density matrix of the two-fermion state described by an
/// antisymmetric coefficient matrix, built by enumerating the pair basis
/// |pq>, p < q, and applying the annihilation delta rules entry by entry.
/// Normalized to unit trace.
inline Matrix fock_reduced_density(const Matrix& omega) {
  const int n = static_cast<int>(omega.rows());
  std::vector<std::pair<int, int>> basis;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) basis.emplace_back(p, q);

  Vector coeff(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto [p, q] = basis[k];
    coeff[static_cast<Eigen::Index>(k)] = omega(p, q) - omega(q, p);
  }
  coeff /= coeff.norm();

  // dropped(mu, r): amplitude of |r> after annihilating mode mu
  Matrix dropped = Matrix::Zero(n, n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto [p, q] = basis[k];
    dropped(p, q) += coeff[static_cast<Eigen::Index>(k)];
    dropped(q, p) -= coeff[static_cast<Eigen::Index>(k)];
  }

  Matrix rho(n, n);
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      Complex s = 0.0;
      for (int r = 0; r < n; ++r) s += std::conj(dropped(nu, r)) * dropped(mu, r);
      rho(mu, nu) = 0.5 * s;
    }
  return rho;
}

inline Eigen::VectorXd hermitian_spectrum(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

inline double linear_entropy_of(const Matrix& rho) {
  const Eigen::VectorXd lam = hermitian_spectrum(rho);
  return 1.0 - lam.squaredNorm();
}

inline double von_neumann_of(const Matrix& rho) {
  const Eigen::VectorXd lam = hermitian_spectrum(rho);
  double s = 0.0;
  for (Eigen::Index k = 0; k < lam.size(); ++k)
    if (lam[k] > 1e-15) s -= lam[k] * std::log(lam[k]);
  return s;
}

/// Random antisymmetric complex matrix with reproducible entries.
inline Matrix random_antisymmetric(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Matrix a = 0.5 * (g - g.transpose());
  return a / a.norm();
}

/// Random unitary via QR of a Gaussian matrix, phase-fixed.
inline Matrix random_unitary(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace oracle
