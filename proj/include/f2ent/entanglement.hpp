#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "f2ent/dense_kernels.hpp"

namespace f2ent {

/// Antisymmetric coefficient matrix of a pure two-fermion state
/// sum_{ij} w_ij c+_i c+_j |0>. The overall scale is arbitrary; every
/// consumer renormalizes through the trace.
struct OmegaMatrix {
  Eigen::MatrixXcd m;

  int dim() const { return static_cast<int>(m.rows()); }

  void validate() const {
    if (m.rows() != m.cols() || m.rows() < 2) {
      throw std::invalid_argument("OmegaMatrix: need a square matrix, dim >= 2");
    }
    const double scale = m.cwiseAbs().maxCoeff();
    if (!(scale > 0.0)) {
      throw std::invalid_argument("OmegaMatrix: zero matrix");
    }
    const double defect = (m + m.transpose()).cwiseAbs().maxCoeff();
    if (defect > 1e-12 * scale) {
      throw std::invalid_argument("OmegaMatrix: not antisymmetric (defect " +
                                  std::to_string(defect / scale) + ")");
    }
  }
};

/// One-particle reduced density matrix, entries <c+_nu c_mu>, unit trace.
struct DensityMatrix1P {
  Eigen::MatrixXcd m;

  int dim() const { return static_cast<int>(m.rows()); }

  void validate() const {
    if (m.rows() != m.cols() || m.rows() < 2) {
      throw std::invalid_argument("DensityMatrix1P: need square, dim >= 2");
    }
    const double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12 * scale) {
      throw std::invalid_argument("DensityMatrix1P: not Hermitian");
    }
    if (std::abs(m.trace().real() - 1.0) > 1e-10 ||
        std::abs(m.trace().imag()) > 1e-12) {
      throw std::invalid_argument("DensityMatrix1P: trace must be 1");
    }
  }
};

/// Slater decomposition weights |z_k|^2: each occurs twice in the spectrum of
/// the reduced density matrix, so sum of 2*weights = 1.
struct SchmidtSpectrum {
  Eigen::VectorXd pair_weights;  ///< descending
  double pairing_defect = 0.0;   ///< max within-pair eigenvalue gap (relative)

  int n_pairs() const { return static_cast<int>(pair_weights.size()); }
};

/// rho = Omega Omega^dagger / Tr(Omega Omega^dagger); one matrix product,
/// no diagonalization.
inline DensityMatrix1P reduced_density(const OmegaMatrix& omega) {
  omega.validate();
  Eigen::MatrixXcd g = gram(omega.m);
  const double tr = g.real().trace();
  g *= 1.0 / tr;
  return {std::move(g)};
}

/// Linear entropy 1 - Tr(rho^2) evaluated as a Frobenius norm of the single
/// product Omega Omega^dagger; never touches an eigensolver.
inline double linear_entropy(const OmegaMatrix& omega) {
  omega.validate();
  const Eigen::MatrixXcd g = gram(omega.m);
  const double tr = g.real().trace();
  return 1.0 - g.squaredNorm() / (tr * tr);
}

namespace detail {

inline Eigen::VectorXd density_eigenvalues(const DensityMatrix1P& rho) {
  rho.validate();
  Eigen::VectorXd vals = hermitian_eigenvalues(rho.m);
  if (vals(0) < -1e-10) {
    throw std::invalid_argument("density matrix has a negative eigenvalue: " +
                                std::to_string(vals(0)));
  }
  return vals;
}

}  // namespace detail

/// -Tr(rho ln rho) with the 0 ln 0 := 0 convention.
inline double von_neumann_entropy(const DensityMatrix1P& rho) {
  const Eigen::VectorXd vals = detail::density_eigenvalues(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) > 1e-15) s -= vals(i) * std::log(vals(i));
  }
  return s;
}

/// Tsallis entropy (Tr rho - Tr rho^q) / (q - 1), q != 1. Reduces to the
/// linear entropy at q = 2 and to von Neumann as q -> 1.
inline double tsallis_entropy(const DensityMatrix1P& rho, double q) {
  if (std::abs(q - 1.0) < 1e-12) {
    throw std::invalid_argument("tsallis_entropy: q = 1 is the vN limit");
  }
  const Eigen::VectorXd vals = detail::density_eigenvalues(rho);
  double tr = 0.0, trq = 0.0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    const double v = std::max(vals(i), 0.0);
    tr += v;
    if (v > 0.0) {
      trq += std::pow(v, q);
    } else if (q < 0.0) {
      trq = std::numeric_limits<double>::infinity();
    }
  }
  return (tr - trq) / (q - 1.0);
}

/// Spectrum of rho grouped into degenerate pairs. Throws if the pairing
/// defect exceeds 1e-6 (relative), which flags a non-fermionic rho.
inline SchmidtSpectrum eigen_pairs(const DensityMatrix1P& rho) {
  if (rho.dim() % 2 != 0) {
    throw std::invalid_argument("eigen_pairs: dimension must be even");
  }
  Eigen::VectorXd vals = detail::density_eigenvalues(rho);
  std::sort(vals.data(), vals.data() + vals.size(), std::greater<double>());
  const double scale = std::max(vals(0), 1e-300);
  const int n = static_cast<int>(vals.size()) / 2;
  Eigen::VectorXd weights(n);
  double defect = 0.0;
  for (int k = 0; k < n; ++k) {
    defect = std::max(defect, (vals(2 * k) - vals(2 * k + 1)) / scale);
    weights(k) = std::max(0.5 * (vals(2 * k) + vals(2 * k + 1)), 0.0);
  }
  if (defect > 1e-6) {
    throw std::invalid_argument(
        "eigen_pairs: unpaired spectrum (defect " + std::to_string(defect) +
        "), not a two-fermion reduced density matrix");
  }
  return {std::move(weights), defect};
}

/// Number of Slater-decomposition terms with weight above tol.
inline int slater_rank_estimate(const DensityMatrix1P& rho, double tol) {
  if (!(tol > 0.0) || !(tol < 1.0 / rho.dim())) {
    throw std::invalid_argument("slater_rank_estimate: need 0 < tol < 1/dim");
  }
  const SchmidtSpectrum s = eigen_pairs(rho);
  int rank = 0;
  for (int k = 0; k < s.n_pairs(); ++k) {
    if (s.pair_weights(k) > tol) ++rank;
  }
  return rank;
}

/// Linear entropy from pair weights, 1 - sum 2 w^2 over pairs.
inline double le_from_pair_weights(const Eigen::VectorXd& w) {
  return 1.0 - 2.0 * w.squaredNorm();
}

/// von Neumann entropy from pair weights, -sum 2 w ln w over pairs.
inline double vne_from_pair_weights(const Eigen::VectorXd& w) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) > 1e-15) s -= 2.0 * w(i) * std::log(w(i));
  }
  return s;
}

/// Maps the linear entropy onto [0, 1]: 0 for a single Slater determinant,
/// 1 for the maximally entangled spectrum on n_pairs pairs.
inline double normalized_le(double le, int n_pairs) {
  if (n_pairs < 2) {
    throw std::invalid_argument("normalized_le: need n_pairs >= 2");
  }
  const double hi = 1.0 - 0.5 / n_pairs;
  if (le < 0.5 - 1e-9 || le > hi + 1e-9) {
    throw std::invalid_argument("normalized_le: value " + std::to_string(le) +
                                " outside [1/2, 1 - 1/(2N)]");
  }
  return (le - 0.5) / (hi - 0.5);
}

/// Maps the von Neumann entropy onto [0, 1] over n_pairs pairs.
inline double normalized_vne(double vne, int n_pairs) {
  if (n_pairs < 2) {
    throw std::invalid_argument("normalized_vne: need n_pairs >= 2");
  }
  const double lo = std::log(2.0);
  const double hi = std::log(2.0 * n_pairs);
  if (vne < lo - 1e-9 || vne > hi + 1e-9) {
    throw std::invalid_argument("normalized_vne: value " + std::to_string(vne) +
                                " outside [ln 2, ln 2N]");
  }
  return (vne - lo) / std::log(static_cast<double>(n_pairs));
}

}  // namespace f2ent
