// Copyright 2026 The snnaccel Authors
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

#ifndef SNNACCEL_ERRORS_H_
#define SNNACCEL_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace snnaccel {

// Every failure raised by the library carries one of these codes. The CLI
// prints the code's name on its machine-readable error line.
enum class ErrorCode {
  kIo,
  kFormat,
  kCorruption,
  kValidation,
  kContract,
  kArithmetic,
  kConstruction,
  kEncoding,
  kQuantization,
  kPacking,
  kRouting,
  kTraining,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

template <ErrorCode kCode>
class TypedError : public Error {
 public:
  explicit TypedError(const std::string& message) : Error(kCode, message) {}
};

using IoError = TypedError<ErrorCode::kIo>;
using FormatError = TypedError<ErrorCode::kFormat>;
using CorruptionError = TypedError<ErrorCode::kCorruption>;
using ValidationError = TypedError<ErrorCode::kValidation>;
using ContractError = TypedError<ErrorCode::kContract>;
using ArithmeticError = TypedError<ErrorCode::kArithmetic>;
using ConstructionError = TypedError<ErrorCode::kConstruction>;
using EncodingError = TypedError<ErrorCode::kEncoding>;
using QuantizationError = TypedError<ErrorCode::kQuantization>;
using PackingError = TypedError<ErrorCode::kPacking>;
using RoutingError = TypedError<ErrorCode::kRouting>;
using TrainingError = TypedError<ErrorCode::kTraining>;

}  // namespace snnaccel

#endif  // SNNACCEL_ERRORS_H_
