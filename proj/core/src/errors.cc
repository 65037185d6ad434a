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

#include "snnaccel/errors.h"

namespace snnaccel {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "io";
    case ErrorCode::kFormat: return "format";
    case ErrorCode::kCorruption: return "corruption";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kContract: return "contract";
    case ErrorCode::kArithmetic: return "arithmetic";
    case ErrorCode::kConstruction: return "construction";
    case ErrorCode::kEncoding: return "encoding";
    case ErrorCode::kQuantization: return "quantization";
    case ErrorCode::kPacking: return "packing";
    case ErrorCode::kRouting: return "routing";
    case ErrorCode::kTraining: return "training";
  }
  return "unknown";
}

}  // namespace snnaccel
