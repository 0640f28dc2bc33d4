// Copyright 2026 The Corn Authors.
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

#ifndef CORN_EVAL_REPORT_H_
#define CORN_EVAL_REPORT_H_

#include <string>

#include "corn/eval/metrics.h"

namespace corn::eval {

// Pretty-printed JSON with fields task, accuracy, collapsed_accuracy (when
// set), macro_precision, macro_recall, macro_f1, total and per_class.
std::string ReportToJson(const MetricReport& report);

// Aligned text table, one row per class plus a macro row.
std::string ReportToTable(const MetricReport& report);

}  // namespace corn::eval

#endif  // CORN_EVAL_REPORT_H_
