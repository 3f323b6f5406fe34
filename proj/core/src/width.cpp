// Copyright 2026 The copsearch Authors
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

#include "copsearch/width.hpp"

namespace copsearch {

namespace {

WidthReport measure(const Digraph& d, const char* name,
                    const GameVariant& variant, int offset,
                    const SolveOptions& options) {
  CopNumberResult mono = cop_number(d, variant, true, options);
  CopNumberResult plain = cop_number(d, variant, false, options);
  WidthReport report;
  report.measure = name;
  report.value = mono.value + offset;
  report.variant = variant;
  report.monotone = true;
  report.offset = offset;
  report.non_monotone_cop_number = plain.value;
  report.certificate = std::move(mono.certificate);
  return report;
}

}  // namespace

WidthReport dag_width(const Digraph& d, const SolveOptions& options) {
  return measure(d, "dagwidth", GameVariant::visible(), 0, options);
}

WidthReport kelly_width(const Digraph& d, const SolveOptions& options) {
  return measure(d, "kellywidth", GameVariant::inert(), 0, options);
}

WidthReport directed_path_width(const Digraph& d, const SolveOptions& options) {
  return measure(d, "dpw", GameVariant::invisible_fast(), -1, options);
}

}  // namespace copsearch
