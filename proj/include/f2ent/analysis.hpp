#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "f2ent/wavefunction.hpp"

namespace f2ent {

/// Amplitude of the free particle conditioned on the partner occupying a
/// given bound level, plus the probability of that condition.
struct TrapLevelProjection {
  WaveFn1P conditional;
  double population = 0.0;
};

/// Projects the second particle of psi onto the supplied bound level:
/// conditional(i) = sum_j conj(level(j)) psi(i, j) * cell_area.
inline TrapLevelProjection project_trap_level(const WaveFn2P& psi,
                                              const WaveFn1P& level) {
  if (!(psi.grid == level.grid))
    throw std::invalid_argument("state and level live on different grids");
  TrapLevelProjection out;
  out.conditional.grid = psi.grid;
  out.conditional.amp = (psi.amp * level.amp.conjugate()) * psi.grid.cell_area();
  out.population = norm_squared(out.conditional);
  return out;
}

/// Late-time plateau of a time series: mean and standard deviation over the
/// trailing fraction of the samples.
struct PlateauStats {
  double value = 0.0;
  double tail_std = 0.0;
  bool steady = false;  ///< tail_std within rel_tol of |value|
};

inline PlateauStats stationary_value(const std::vector<double>& v,
                                     double tail_fraction = 0.2,
                                     double rel_tol = 0.02) {
  if (v.empty()) throw std::invalid_argument("empty series");
  if (!(tail_fraction > 0.0) || tail_fraction > 1.0)
    throw std::invalid_argument("tail fraction must lie in (0, 1]");
  const std::size_t n = v.size();
  const std::size_t tail = std::max<std::size_t>(1, static_cast<std::size_t>(
                                                        std::ceil(tail_fraction * n)));
  double mean = 0.0;
  for (std::size_t k = n - tail; k < n; ++k) mean += v[k];
  mean /= static_cast<double>(tail);
  double var = 0.0;
  for (std::size_t k = n - tail; k < n; ++k) var += (v[k] - mean) * (v[k] - mean);
  var /= static_cast<double>(tail);
  PlateauStats out;
  out.value = mean;
  out.tail_std = std::sqrt(var);
  out.steady = out.tail_std <= rel_tol * std::abs(out.value);
  return out;
}

/// First time after which the series stays inside a band around its plateau.
/// The band is band_fraction times the total rise |plateau - v0|, which makes
/// the result invariant under affine rescaling of the series. Returns NaN if
/// the series never settles into the band.
inline double formation_time(const std::vector<double>& t,
                             const std::vector<double>& v, double plateau,
                             double band_fraction = 0.05) {
  if (t.size() != v.size()) throw std::invalid_argument("series length mismatch");
  if (t.empty()) throw std::invalid_argument("empty series");
  if (!(band_fraction > 0.0)) throw std::invalid_argument("band fraction must be positive");
  const double rise = std::abs(plateau - v.front());
  if (rise < 1e-15) return t.front();
  const double band = band_fraction * rise;
  std::size_t last_outside = t.size();  // sentinel: never outside
  for (std::size_t k = t.size(); k-- > 0;) {
    if (std::abs(v[k] - plateau) > band) {
      last_outside = k;
      break;
    }
  }
  if (last_outside == t.size()) return t.front();
  if (last_outside + 1 >= t.size())
    return std::numeric_limits<double>::quiet_NaN();
  return t[last_outside + 1];
}

}  // namespace f2ent
