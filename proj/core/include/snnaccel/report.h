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

// CSV report writers. Column headers are fixed; missing measurements are
// written as "N/A".

#ifndef SNNACCEL_REPORT_H_
#define SNNACCEL_REPORT_H_

#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include "snnaccel/harness.h"

namespace snnaccel {

inline constexpr const char* kPlatformHeader =
    "platform,accuracy_pct,latency_us,throughput_img_s,energy_nj";
inline constexpr const char* kRobustnessHeader = "ratio,accuracy_pct";
inline constexpr const char* kScopeHeader = "phase,ms_per_image";
inline constexpr const char* kMismatchHeader =
    "index,reference_label,reference_no_spike,accel_label,accel_no_spike";
inline constexpr const char* kPredictionHeader = "index,label,predicted,no_spike";

// Fixed-point formatting independent of the stream's locale and flags.
std::string FormatFixed(double value, int decimals);
std::string FormatOptional(const std::optional<double>& value, int decimals);

void WritePlatformCsv(const EvalReport& report, std::ostream& out);
void WriteRobustnessCsv(const RobustnessReport& report, std::ostream& out);
void WriteScopeCsv(const ScopeBreakdown& breakdown, std::ostream& out);
void WriteMismatchCsv(const EquivalenceReport& report, std::ostream& out);
void WritePredictionCsv(const EvalReport& report, const Dataset& dataset,
                        std::ostream& out);

// Opens `path`, runs `write`, and throws IoError if anything fails.
void WriteReportFile(const std::string& path,
                     const std::function<void(std::ostream&)>& write);

}  // namespace snnaccel

#endif  // SNNACCEL_REPORT_H_
