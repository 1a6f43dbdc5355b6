// Copyright 2026 The Translative Authors.
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

#ifndef TRANSLATIVE_ERRORS_HPP_
#define TRANSLATIVE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace translative {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TRANSLATIVE_DECLARE_ERROR(Name)  \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

// +inf and -inf were added together.
TRANSLATIVE_DECLARE_ERROR(IndeterminateSum);
TRANSLATIVE_DECLARE_ERROR(DimensionMismatch);
TRANSLATIVE_DECLARE_ERROR(InvalidArgument);
// The direction k violates Wk >= 0, so k is not in the negative recession cone.
TRANSLATIVE_DECLARE_ERROR(NotRecessionDirection);
TRANSLATIVE_DECLARE_ERROR(SingularMatrix);
TRANSLATIVE_DECLARE_ERROR(NotApplicable);
// A membership oracle was observed to be non-monotone along -k.
TRANSLATIVE_DECLARE_ERROR(ContractViolation);
TRANSLATIVE_DECLARE_ERROR(NonPositiveTolerance);
TRANSLATIVE_DECLARE_ERROR(BasePointNotInSet);
TRANSLATIVE_DECLARE_ERROR(EmptySampleSet);
TRANSLATIVE_DECLARE_ERROR(ParseError);
TRANSLATIVE_DECLARE_ERROR(UnknownSuite);

#undef TRANSLATIVE_DECLARE_ERROR

}  // namespace translative

#endif  // TRANSLATIVE_ERRORS_HPP_
