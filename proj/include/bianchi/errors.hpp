// Copyright 2026 The Bianchi Quintic Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIANCHI_ERRORS_HPP
#define BIANCHI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bianchi {

// Base of every error the library raises. Callers that only care about
// "something in the kernel failed" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BIANCHI_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

// exact
BIANCHI_DEFINE_ERROR(ZeroLeadingCoefficient);
BIANCHI_DEFINE_ERROR(OrderExceeded);
BIANCHI_DEFINE_ERROR(InvalidSeries);
BIANCHI_DEFINE_ERROR(ParseError);

// theta
BIANCHI_DEFINE_ERROR(DomainError);
BIANCHI_DEFINE_ERROR(ConvergenceError);
BIANCHI_DEFINE_ERROR(NumericOverflow);
BIANCHI_DEFINE_ERROR(DivisionByZero);

// modular / identities
BIANCHI_DEFINE_ERROR(UnknownName);
BIANCHI_DEFINE_ERROR(InvalidConfig);

// curve
BIANCHI_DEFINE_ERROR(BothFormulasDegenerate);
BIANCHI_DEFINE_ERROR(DegenerateResult);
BIANCHI_DEFINE_ERROR(SingularCurve);
BIANCHI_DEFINE_ERROR(DenominatorVanishes);

// congruence
BIANCHI_DEFINE_ERROR(NotAGroup);
BIANCHI_DEFINE_ERROR(NotContained);

#undef BIANCHI_DEFINE_ERROR

}  // namespace bianchi

#endif  // BIANCHI_ERRORS_HPP
