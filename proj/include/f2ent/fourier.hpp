#pragma once

#include <array>
#include <complex>
#include <stdexcept>

#include <fftw3.h>

#include "f2ent/grid.hpp"

namespace f2ent {

/// Opt-in FFTW threading (no-op unless built with FFTW threads support).
inline void init_fft_threads(int n_threads) {
#ifdef F2ENT_FFTW_THREADS
  static bool initialized = false;
  if (!initialized) {
    fftw_init_threads();
    initialized = true;
  }
  fftw_plan_with_nthreads(n_threads > 0 ? n_threads : 1);
#else
  (void)n_threads;
#endif
}

/// In-place c2c transform pair bound to a caller-owned buffer. Plans use
/// FFTW_ESTIMATE: measured planning would make results depend on runtime
/// timings and break byte-identical reruns.
class FourierTransform {
 public:
  FourierTransform(int rank, const int* dims, std::complex<double>* data) {
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fwd_ = fftw_plan_dft(rank, dims, p, p, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft(rank, dims, p, p, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!fwd_ || !bwd_) {
      throw std::runtime_error("FourierTransform: planning failed");
    }
  }

  FourierTransform(const FourierTransform&) = delete;
  FourierTransform& operator=(const FourierTransform&) = delete;

  ~FourierTransform() {
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
  }

  void forward() { fftw_execute(fwd_); }   ///< unnormalized
  void backward() { fftw_execute(bwd_); }  ///< unnormalized

 private:
  fftw_plan fwd_ = nullptr;
  fftw_plan bwd_ = nullptr;
};

/// Single-particle transform on a Grid2D-shaped buffer (site index i*ny + j).
inline FourierTransform make_transform_1p(const Grid2D& g,
                                          std::complex<double>* data) {
  const std::array<int, 2> dims{g.nx, g.ny};
  return {2, dims.data(), data};
}

/// Two-particle transform on the column-major (M x M) amplitude buffer; both
/// particles' axes are transformed in one rank-4 pass.
inline FourierTransform make_transform_2p(const Grid2D& g,
                                          std::complex<double>* data) {
  const std::array<int, 4> dims{g.nx, g.ny, g.nx, g.ny};
  return {4, dims.data(), data};
}

}  // namespace f2ent
