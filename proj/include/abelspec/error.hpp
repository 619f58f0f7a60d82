// Copyright 2026 The abelspec Authors.
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

#ifndef ABELSPEC_ERROR_HPP_
#define ABELSPEC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace abelspec {

// Numeric values are part of the C ABI (see abelspec.h) and must not change.
enum class ErrorCode : int {
  kOk = 0,
  // group_core
  kEmptyModuli = 1,
  kModulusTooSmall = 2,
  kOrderCapExceeded = 3,
  kElementNotInGroup = 4,
  // fourier
  kNonFiniteValue = 10,
  kGroupMismatch = 11,
  kNegativeTolerance = 12,
  kNotConstantOnCosets = 13,
  kTransformCapExceeded = 14,
  // posdef
  kNotRealValued = 20,
  kZeroVector = 21,
  kNegativeEntries = 22,
  kDegenerateDenominator = 23,
  kNotPositiveDefinite = 24,
  kComplexCoefficients = 25,
  kBadK = 26,
  // covering
  kEmptySupport = 30,
  kArityMismatch = 31,
  kRZero = 32,
  kBadM = 33,
  kMTooLarge = 34,
  kBudgetExceeded = 35,
  // cayley_spectral
  kAsymmetricWeight = 40,
  kNegativeWeight = 41,
  kLengthMismatch = 42,
  kNotSymmetric = 43,
  kNoConvergence = 44,
  kTooLarge = 45,
  kKTooSmall = 46,
  // walks
  kNotProbability = 50,
  kNotGenerating = 51,
  kEpsilonOutOfRange = 52,
  kIterationCapExceeded = 53,
  kPeriodicChain = 54,
  kInvalidSpec = 55,
  kWeightNotSimplex = 56,
  // sumset
  kNotSymmetricSet = 60,
  kNonPositiveWeight = 61,
  kConstantProduct = 62,
  kMTooSmall = 63,
  kNoPrimeInRange = 64,
  kConditionUnsatisfiable = 65,
  // cli_io
  kSchemaError = 70,
  kUnknownTask = 71,
  kUnknownField = 72,
  kIoError = 73,
  kInvalidArgument = 98,
  kInternal = 99,
};

std::string_view ErrorName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace abelspec

#endif  // ABELSPEC_ERROR_HPP_
