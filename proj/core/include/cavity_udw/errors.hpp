// Copyright 2026 The cavity-udw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace cavity_udw {

// Invalid parameters or arguments outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A quadrature or mode sum ran out of budget. Carries the best estimate
// reached so far and the error/tail estimate that failed the tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> partial,
                   double achieved, long work = 0);

  std::complex<double> partial_value() const noexcept { return partial_; }
  double achieved_tolerance() const noexcept { return achieved_; }
  long work() const noexcept { return work_; }

 private:
  std::complex<double> partial_;
  double achieved_;
  long work_;
};

// A quantity that must be real (or traceless, ...) came out inconsistent.
class ConsistencyError : public std::runtime_error {
 public:
  ConsistencyError(const std::string& what, double residual);
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Denominator of a ratio underflowed.
class UnderflowError : public std::range_error {
 public:
  using std::range_error::range_error;
};

}  // namespace cavity_udw
