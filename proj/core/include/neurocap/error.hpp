// Copyright 2026 The neurocap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace neurocap {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (bad PMF, out-of-range parameter,
// mismatched alphabets). The CLI maps this to exit status 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of a density or law.
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// An iterative method stopped before reaching its tolerance. Carries the best
// certified bracket seen so far. The CLI maps this to exit status 3.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_lower, double best_upper)
      : Error(what), best_lower_(best_lower), best_upper_(best_upper) {}

  double best_lower() const { return best_lower_; }
  double best_upper() const { return best_upper_; }

 private:
  double best_lower_;
  double best_upper_;
};

// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public ConvergenceError {
 public:
  QuadratureError(const std::string& what, double value, double achieved_tolerance)
      : ConvergenceError(what, value, value), achieved_tolerance_(achieved_tolerance) {}

  double achieved_tolerance() const { return achieved_tolerance_; }

 private:
  double achieved_tolerance_;
};

}  // namespace neurocap
