#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "f2ent/dense_kernels.hpp"
#include "f2ent/entanglement.hpp"
#include "f2ent/errors.hpp"
#include "f2ent/wavefunction.hpp"

namespace f2ent {

/// Spin arrangement of the two colliding electrons. The propagated orbital
/// wave function is spin-independent; the arrangement decides how it enters
/// the antisymmetric two-fermion amplitude.
enum class SpinConfig {
  same_spin,              ///< parallel spins, orbital part antisymmetric
  opposite_spin_product,  ///< distinguishable-spin product, no exchange symmetry imposed
  singlet,                ///< total spin 0, orbital part symmetric
  triplet,                ///< total spin 1 (m = 0), orbital part antisymmetric
};

inline constexpr const char* to_string(SpinConfig cfg) {
  switch (cfg) {
    case SpinConfig::same_spin: return "same_spin";
    case SpinConfig::opposite_spin_product: return "opposite_spin_product";
    case SpinConfig::singlet: return "singlet";
    case SpinConfig::triplet: return "triplet";
  }
  return "unknown";
}

inline SpinConfig spin_config_from(std::string_view name) {
  for (SpinConfig cfg : {SpinConfig::same_spin, SpinConfig::opposite_spin_product,
                         SpinConfig::singlet, SpinConfig::triplet})
    if (name == to_string(cfg)) return cfg;
  throw ConfigError("unknown spin configuration '" + std::string(name) + "'");
}

inline std::vector<SpinConfig> all_spin_configs() {
  return {SpinConfig::same_spin, SpinConfig::opposite_spin_product,
          SpinConfig::singlet, SpinConfig::triplet};
}

/// Exchange-antisymmetric and -symmetric halves of an orbital two-particle
/// amplitude C: antisym = (C - C^T)/2, sym = (C + C^T)/2. A swap-symmetric
/// Hamiltonian evolves the halves independently, so they can be split once
/// per snapshot. No rescaling is applied; the relative weight of the halves
/// carries physics for the product arrangement.
struct SpatialBlocks {
  Grid2D grid;
  MatrixXcd antisym;
  MatrixXcd sym;
};

inline SpatialBlocks split_exchange(const WaveFn2P& psi) {
  SpatialBlocks blocks{psi.grid, 0.5 * (psi.amp - psi.amp.transpose()),
                       0.5 * (psi.amp + psi.amp.transpose())};
  return blocks;
}

namespace detail {

inline const MatrixXcd& orbital_block(const SpatialBlocks& blocks, SpinConfig cfg) {
  const bool wants_antisym =
      cfg == SpinConfig::same_spin || cfg == SpinConfig::triplet;
  const MatrixXcd& block = wants_antisym ? blocks.antisym : blocks.sym;
  const double total = std::sqrt(blocks.antisym.squaredNorm() + blocks.sym.squaredNorm());
  if (block.norm() <= 1e-12 * total)
    throw std::domain_error(std::string("orbital component required for ") +
                            to_string(cfg) + " vanishes");
  return block;
}

inline double shannon_term(double lambda) {
  return lambda > 1e-15 ? -lambda * std::log(lambda) : 0.0;
}

}  // namespace detail

/// Two-fermion coefficient matrix over spin orbitals (site index runs fast,
/// spin block second), built from the orbital halves. Any overall scale is
/// immaterial to the reduced density matrix.
inline OmegaMatrix build_spin_omega(const SpatialBlocks& blocks, SpinConfig cfg) {
  const Eigen::Index m = blocks.antisym.rows();
  OmegaMatrix omega;
  omega.m = MatrixXcd::Zero(2 * m, 2 * m);
  switch (cfg) {
    case SpinConfig::same_spin:
      omega.m.topLeftCorner(m, m) = detail::orbital_block(blocks, cfg);
      break;
    case SpinConfig::triplet: {
      const MatrixXcd& a = detail::orbital_block(blocks, cfg);
      omega.m.block(0, m, m, m) = a;
      omega.m.block(m, 0, m, m) = a;
      break;
    }
    case SpinConfig::singlet: {
      const MatrixXcd& s = detail::orbital_block(blocks, cfg);
      omega.m.block(0, m, m, m) = s;
      omega.m.block(m, 0, m, m) = -s;
      break;
    }
    case SpinConfig::opposite_spin_product: {
      const MatrixXcd c = blocks.antisym + blocks.sym;
      if (c.norm() <= 0.0) throw std::domain_error("orbital amplitude vanishes");
      omega.m.block(0, m, m, m) = c;
      omega.m.block(m, 0, m, m) = -c.transpose();
      break;
    }
  }
  omega.validate();
  return omega;
}

/// Occupancy-spectrum mixedness for one spin arrangement, computed from the
/// m x m orbital halves without forming the 2m x 2m amplitude and without
/// any eigensolve.
inline double spin_linear_entropy(const SpatialBlocks& blocks, SpinConfig cfg) {
  switch (cfg) {
    case SpinConfig::same_spin: {
      const MatrixXcd g = gram(detail::orbital_block(blocks, cfg));
      const double tr = g.real().trace();
      return 1.0 - g.squaredNorm() / (tr * tr);
    }
    case SpinConfig::triplet:
    case SpinConfig::singlet: {
      const MatrixXcd g = gram(detail::orbital_block(blocks, cfg));
      const double tr = g.real().trace();
      return 1.0 - g.squaredNorm() / (2.0 * tr * tr);
    }
    case SpinConfig::opposite_spin_product: {
      const MatrixXcd p = gram(blocks.antisym) + gram(blocks.sym);
      const MatrixXcd cross = product_adjoint(blocks.antisym, blocks.sym);
      const MatrixXcd q = cross + cross.adjoint();
      const double tr = p.real().trace();
      if (!(tr > 0.0)) throw std::domain_error("orbital amplitude vanishes");
      return 1.0 - (p.squaredNorm() + q.squaredNorm()) / (2.0 * tr * tr);
    }
  }
  throw std::logic_error("unreachable spin configuration");
}

struct SpinEntropies {
  double le = 0.0;
  double vne = 0.0;
};

/// Linear and von Neumann occupancy entropies for one spin arrangement.
/// Shares the m x m Gram matrices between the two measures; the von Neumann
/// value costs one Hermitian eigensolve per Gram matrix.
inline SpinEntropies spin_entropies(const SpatialBlocks& blocks, SpinConfig cfg) {
  const auto shannon = [](const Eigen::VectorXd& eigs, double scale) {
    double h = 0.0;
    for (Eigen::Index k = 0; k < eigs.size(); ++k)
      h += detail::shannon_term(eigs[k] * scale);
    return h;
  };
  SpinEntropies out;
  switch (cfg) {
    case SpinConfig::same_spin:
    case SpinConfig::triplet:
    case SpinConfig::singlet: {
      const MatrixXcd g = gram(detail::orbital_block(blocks, cfg));
      const double tr = g.real().trace();
      const double q2 = g.squaredNorm() / (tr * tr);
      const Eigen::VectorXd eigs = hermitian_eigenvalues(g);
      const double vne_base = shannon(eigs, 1.0 / tr);
      if (cfg == SpinConfig::same_spin) {
        out.le = 1.0 - q2;
        out.vne = vne_base;
      } else {
        out.le = 1.0 - 0.5 * q2;
        out.vne = vne_base + std::log(2.0);
      }
      return out;
    }
    case SpinConfig::opposite_spin_product: {
      const MatrixXcd p = gram(blocks.antisym) + gram(blocks.sym);
      const MatrixXcd cross = product_adjoint(blocks.antisym, blocks.sym);
      const MatrixXcd q = cross + cross.adjoint();
      const double tr = p.real().trace();
      if (!(tr > 0.0)) throw std::domain_error("orbital amplitude vanishes");
      out.le = 1.0 - (p.squaredNorm() + q.squaredNorm()) / (2.0 * tr * tr);
      const double scale = 1.0 / (2.0 * tr);
      out.vne = shannon(hermitian_eigenvalues(p + q), scale) +
                shannon(hermitian_eigenvalues(p - q), scale);
      return out;
    }
  }
  throw std::logic_error("unreachable spin configuration");
}

}  // namespace f2ent
