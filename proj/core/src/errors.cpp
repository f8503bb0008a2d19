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

#include "cavity_udw/errors.hpp"

namespace cavity_udw {

ConvergenceError::ConvergenceError(const std::string& what,
                                   std::complex<double> partial,
                                   double achieved, long work)
    : std::runtime_error(what),
      partial_(partial),
      achieved_(achieved),
      work_(work) {}

ConsistencyError::ConsistencyError(const std::string& what, double residual)
    : std::runtime_error(what), residual_(residual) {}

}  // namespace cavity_udw
