// Copyright 2026 The qlease Authors
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

#ifndef QLEASE_HARNESS_REPORT_H
#define QLEASE_HARNESS_REPORT_H

#include <string>

#include "qlease/harness/games.h"

namespace qlease::harness {

/// JSON object with "schema_version" = kReportSchemaVersion.
std::string report_json(const GameReport &r, int indent = 2);

/// Short human-readable summary.
std::string report_text(const GameReport &r);

}  // namespace qlease::harness

#endif
