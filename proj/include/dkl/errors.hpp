// Copyright 2026 The Authors.
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

#ifndef DKL_ERRORS_HPP_
#define DKL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dkl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define DKL_DEFINE_ERROR(Name)                       \
  struct Name : Error {                              \
    explicit Name(const std::string& what)           \
        : Error(std::string(#Name ": ") + what) {}   \
  }

DKL_DEFINE_ERROR(InconsistentSamples);
DKL_DEFINE_ERROR(NonIntegerCoefficients);
DKL_DEFINE_ERROR(NotCompletable);
DKL_DEFINE_ERROR(NotDivisible);
DKL_DEFINE_ERROR(TooLarge);
DKL_DEFINE_ERROR(NotAGroup);
DKL_DEFINE_ERROR(NotAMatroid);
DKL_DEFINE_ERROR(InvalidSite);
DKL_DEFINE_ERROR(CapExceeded);
DKL_DEFINE_ERROR(NotGraded);
DKL_DEFINE_ERROR(BadConstantTerm);
DKL_DEFINE_ERROR(NotInvertible);
DKL_DEFINE_ERROR(NonIntegralCoefficient);
DKL_DEFINE_ERROR(DegreeMismatch);
DKL_DEFINE_ERROR(UsageError);
DKL_DEFINE_ERROR(Mismatch);

#undef DKL_DEFINE_ERROR

}  // namespace dkl

#endif  // DKL_ERRORS_HPP_
