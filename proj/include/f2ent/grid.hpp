#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace f2ent {

namespace detail {

/// True if n factors completely into 2, 3 and 5 (fast FFT sizes).
inline bool fft_friendly(int n) {
  for (int p : {2, 3, 5}) {
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

}  // namespace detail

/// Uniform rectangular real-space grid. Points sit at (i*dx, j*dy) with
/// i in [0, nx), j in [0, ny); the flattened site index is i*ny + j.
struct Grid2D {
  int nx = 0;
  int ny = 0;
  double dx = 0.0;  ///< nm
  double dy = 0.0;  ///< nm

  int size() const { return nx * ny; }
  double lx() const { return nx * dx; }
  double ly() const { return ny * dy; }
  double cell_area() const { return dx * dy; }

  double x(int i) const { return i * dx; }
  double y(int j) const { return j * dy; }
  int index(int i, int j) const { return i * ny + j; }

  /// Momentum value conjugate to axis index i under the discrete Fourier
  /// transform convention (positive frequencies first, then negative).
  double kx(int i) const {
    const int f = (i < (nx + 1) / 2) ? i : i - nx;
    return 2.0 * std::numbers::pi * f / lx();
  }
  double ky(int j) const {
    const int f = (j < (ny + 1) / 2) ? j : j - ny;
    return 2.0 * std::numbers::pi * f / ly();
  }

  void validate() const {
    if (nx < 16 || ny < 16) {
      throw std::invalid_argument("Grid2D: nx and ny must be at least 16");
    }
    if (!detail::fft_friendly(nx) || !detail::fft_friendly(ny)) {
      throw std::invalid_argument(
          "Grid2D: nx and ny must factor into 2, 3 and 5 (got " +
          std::to_string(nx) + "x" + std::to_string(ny) + ")");
    }
    if (!(dx > 0.0) || !(dy > 0.0)) {
      throw std::invalid_argument("Grid2D: spacings must be positive");
    }
  }

  bool operator==(const Grid2D&) const = default;
};

}  // namespace f2ent
