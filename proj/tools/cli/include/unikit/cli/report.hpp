// Copyright 2026 The unikit Authors
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

#include <string>

#include "unikit/classifier.hpp"

namespace unikit::cli {

inline constexpr const char* kReportSchema = "unikit.report/1";

/// Machine-readable classification report.
struct ReportRecord {
  std::string schema = kReportSchema;
  SectorDescriptor sector;
  Family family = Family::kLOB;
  ExtensionKind kind = ExtensionKind::kHamiltonian;
  ClassificationResult result;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

ReportRecord make_report(const Scenario& s, const ClassificationResult& r);

/// Pretty-printed JSON with a fixed key order.
std::string to_json(const ReportRecord& r);
/// Throws kInvalidScenario on schema violations.
ReportRecord report_from_json(const std::string& text);

/// Human-readable block.
std::string to_text(const ReportRecord& r);

}  // namespace unikit::cli
