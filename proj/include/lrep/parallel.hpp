// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

namespace lrep {

// Selects between the serial reference path of a kernel and its OpenMP path.
// Both paths produce identical results.
enum class Execution { kSerial, kParallel };

// Caps the number of OpenMP workers; 0 leaves the runtime default.
void set_max_workers(int workers);
int max_workers();

}  // namespace lrep
