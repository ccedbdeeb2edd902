// Copyright 2026 The levyexit Authors
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
#include <vector>

#include "cli.hpp"

namespace levyexit::cli {

struct FigureCurve {
  std::string label;
  ProblemSpec spec;
};

/// One output file: curves sharing b, hence the same x-grid.
struct FigurePanel {
  std::string name;
  std::vector<FigureCurve> curves;
};

std::vector<std::string> figure_ids();

/// Panels for fig5 .. fig13. Throws std::invalid_argument for other ids.
std::vector<FigurePanel> figure_panels(const std::string& id);

/// Wide CSV `x,<label>,...` or JSON with one array per curve.
std::string emit_panel(const FigurePanel& panel, const std::vector<SolutionProfile>& profiles,
                       OutputFormat format);

}  // namespace levyexit::cli
