#pragma once

#include <cblas.h>

namespace f2ent {

inline void set_blas_threads(int n_threads) {
  openblas_set_num_threads(n_threads > 0 ? n_threads : 1);
}

}  // namespace f2ent
