// SPDX-License-Identifier: Apache-2.0
#include "lrep/parallel.hpp"

#include <omp.h>

#include <atomic>

namespace lrep {

namespace {
std::atomic<int> cap{0};
}

void set_max_workers(int workers) {
  cap = workers < 0 ? 0 : workers;
  if (cap > 0) omp_set_num_threads(cap);
}

int max_workers() { return cap > 0 ? cap.load() : omp_get_max_threads(); }

}  // namespace lrep
