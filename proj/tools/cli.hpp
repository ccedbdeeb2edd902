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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "levyexit/exit_solver.hpp"
#include "levyexit/monte_carlo.hpp"
#include "levyexit/verification.hpp"

namespace levyexit::cli {

enum class OutputFormat { csv, json };

OutputFormat parse_format(const std::string& text);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSolver = 2;

/// CSV: header `x,u` (`x,p` for escape_right), ascending x, 12 significant
/// digits. JSON: the same columns plus problem and solver metadata.
std::string emit_profile(const SolutionProfile& profile, OutputFormat format);

std::string emit_report(const ConvergenceReport& report, OutputFormat format);

std::string emit_mc(const ProblemSpec& spec, double x0, const McConfig& config, const McExitEstimate& estimate,
                    OutputFormat format);

/// Writes through a sibling temporary file and a rename so readers never see
/// a partial file. Throws std::runtime_error naming the path on failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// Reads `key = value` lines; `#` starts a comment. Keys are long flag names
/// without the leading dashes.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path);

/// args excludes the program name. Exit codes: 0 success, 1 usage or
/// validation error, 2 solver failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace levyexit::cli
