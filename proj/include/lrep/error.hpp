// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lrep {

// Malformed or inconsistent input supplied by the caller.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A desk-scale guard was exceeded.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lrep
