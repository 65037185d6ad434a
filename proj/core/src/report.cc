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

#include "snnaccel/report.h"

#include <cstdio>
#include <fstream>

#include "snnaccel/errors.h"

namespace snnaccel {

std::string FormatFixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

std::string FormatOptional(const std::optional<double>& value, int decimals) {
  return value ? FormatFixed(*value, decimals) : "N/A";
}

void WritePlatformCsv(const EvalReport& report, std::ostream& out) {
  out << kPlatformHeader << '\n';
  for (const PlatformRow& row : report.rows) {
    out << row.platform << ',' << FormatFixed(row.accuracy_pct, 2) << ','
        << FormatOptional(row.latency_us, 4) << ','
        << FormatOptional(row.throughput_img_s, 1) << ','
        << FormatOptional(row.energy_nj, 2) << '\n';
  }
}

void WriteRobustnessCsv(const RobustnessReport& report, std::ostream& out) {
  out << kRobustnessHeader << '\n';
  for (const RobustnessPoint& p : report.points) {
    out << FormatFixed(p.ratio, 2) << ',' << FormatFixed(p.accuracy_pct, 2) << '\n';
  }
}

void WriteScopeCsv(const ScopeBreakdown& b, std::ostream& out) {
  out << kScopeHeader << '\n'
      << "reference_eval," << FormatFixed(b.reference_eval_ms, 6) << '\n'
      << "spike_packing," << FormatFixed(b.spike_packing_ms, 6) << '\n'
      << "accel_run_plus_orchestration," << FormatFixed(b.accel_run_ms, 6) << '\n'
      << "readback," << FormatFixed(b.readback_ms, 6) << '\n'
      << "end_to_end," << FormatFixed(b.end_to_end_ms, 6) << '\n';
}

void WriteMismatchCsv(const EquivalenceReport& report, std::ostream& out) {
  out << kMismatchHeader << '\n';
  for (const Mismatch& m : report.mismatches) {
    out << m.index << ',' << m.reference_label << ',' << int{m.reference_no_spike}
        << ',' << m.accel_label << ',' << int{m.accel_no_spike} << '\n';
  }
}

void WritePredictionCsv(const EvalReport& report, const Dataset& dataset,
                        std::ostream& out) {
  out << kPredictionHeader << '\n';
  for (std::size_t i = 0; i < report.predictions.size(); ++i) {
    out << i << ',' << int{dataset.labels[i]} << ',' << report.predictions[i] << ','
        << int{report.no_spike_flags[i]} << '\n';
  }
}

void WriteReportFile(const std::string& path,
                     const std::function<void(std::ostream&)>& write) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write(out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace snnaccel
