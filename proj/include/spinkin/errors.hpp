// Copyright 2026 The spinkin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINKIN_ERRORS_HPP
#define SPINKIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spinkin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input (bad dims, non-hermitian, non-unit...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Raised by the Bures solver and the mixed-family builder when the state
// sits at (or beyond) the boundary of the positive cone.
class DegenerateState : public Error {
 public:
  DegenerateState(const std::string& what, double min_eigenvalue)
      : Error(what + " (min eigenvalue " + std::to_string(min_eigenvalue) + ")"),
        min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

}  // namespace spinkin

#endif  // SPINKIN_ERRORS_HPP
