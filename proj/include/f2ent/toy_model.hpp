#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "f2ent/entanglement.hpp"

namespace f2ent {

/// Family of two-fermion states on 2N modes interpolating from one Slater
/// determinant (alpha = 0) to an even spread over N determinants (alpha = 1).
struct ToyModelParams {
  int n_pairs = 2;      ///< N >= 2
  double alpha = 0.0;   ///< in [0, 1]

  void validate() const {
    if (n_pairs < 2) {
      throw std::invalid_argument(
          "ToyModelParams: need N >= 2 (a single pair has nothing to mix with)");
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      throw std::invalid_argument("ToyModelParams: alpha must lie in [0, 1]");
    }
  }
};

/// Slater pair weights of the interpolating state, descending (leading pair
/// first, then N-1 equal satellites).
inline Eigen::VectorXd chi_pair_weights(const ToyModelParams& p) {
  p.validate();
  const double n = p.n_pairs;
  const double u = (1.0 - p.alpha) * (1.0 - p.alpha);
  Eigen::VectorXd w(p.n_pairs);
  w(0) = (1.0 + (n - 1.0) * u) / (2.0 * n);
  const double sat = p.alpha * (2.0 - p.alpha) / (2.0 * n);
  for (int k = 1; k < p.n_pairs; ++k) w(k) = sat;
  return w;
}

/// Dense coefficient matrix of the interpolating state (dim 2N).
inline OmegaMatrix build_chi_omega(const ToyModelParams& p) {
  const Eigen::VectorXd w = chi_pair_weights(p);
  const int dim = 2 * p.n_pairs;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < p.n_pairs; ++k) {
    const double a = std::sqrt(w(k));
    m(2 * k, 2 * k + 1) = a;
    m(2 * k + 1, 2 * k) = -a;
  }
  return {std::move(m)};
}

/// Closed-form linear entropy, 1 - 1/(2N) - (N-1)(1-alpha)^4 / (2N).
inline double le_chi_closed(const ToyModelParams& p) {
  p.validate();
  const double n = p.n_pairs;
  const double u2 = std::pow(1.0 - p.alpha, 4);
  return 1.0 - 0.5 / n - (n - 1.0) * u2 / (2.0 * n);
}

/// Closed-form normalized linear entropy, 1 - (1-alpha)^4 (N-independent).
inline double le_chi_normalized(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("le_chi_normalized: alpha must lie in [0, 1]");
  }
  return 1.0 - std::pow(1.0 - alpha, 4);
}

/// Closed-form normalized von Neumann entropy of the interpolating state.
inline double vne_chi_normalized(const ToyModelParams& p) {
  p.validate();
  const double n = p.n_pairs;
  const double u = (1.0 - p.alpha) * (1.0 - p.alpha);
  const double a = p.alpha * (2.0 - p.alpha);      // N * satellite pair sum
  const double b = 1.0 + u * (n - 1.0);            // N * leading pair sum
  double s = 0.0;
  if (a > 0.0) s += (n - 1.0) * a * std::log(a / n);
  if (b > 0.0) s += b * std::log(b / n);
  return -s / (n * std::log(n));
}

struct ToySweepRow {
  double alpha;
  double le_norm;
  double vne_norm;
  double le;
  double vne;
};

/// Evaluates the entanglement of the interpolating state at n_points evenly
/// spaced alpha values through the generic machinery: dense matrices up to
/// N = 64, the analytic spectrum beyond (the state is diagonal in its mode
/// basis, so the pair weights are exact either way).
inline std::vector<ToySweepRow> sweep_alpha(int n_pairs, int n_points) {
  if (n_points < 2) {
    throw std::invalid_argument("sweep_alpha: need at least 2 points");
  }
  std::vector<ToySweepRow> rows;
  rows.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double alpha = static_cast<double>(i) / (n_points - 1);
    const ToyModelParams p{n_pairs, alpha};
    double le, vne;
    if (n_pairs <= 64) {
      const OmegaMatrix omega = build_chi_omega(p);
      le = linear_entropy(omega);
      const SchmidtSpectrum spectrum = eigen_pairs(reduced_density(omega));
      vne = vne_from_pair_weights(spectrum.pair_weights);
    } else {
      const Eigen::VectorXd w = chi_pair_weights(p);
      le = le_from_pair_weights(w);
      vne = vne_from_pair_weights(w);
    }
    rows.push_back({alpha, normalized_le(le, n_pairs),
                    normalized_vne(vne, n_pairs), le, vne});
  }
  return rows;
}

}  // namespace f2ent
