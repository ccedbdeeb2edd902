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

#include "levyexit/discretization.hpp"
#include "levyexit/drift.hpp"
#include "levyexit/exit_solver.hpp"
#include "levyexit/levy_coefficients.hpp"
#include "levyexit/linalg.hpp"
#include "levyexit/monte_carlo.hpp"
#include "levyexit/parallel.hpp"
#include "levyexit/problem.hpp"
#include "levyexit/quadrature.hpp"
#include "levyexit/special_functions.hpp"
#include "levyexit/verification.hpp"
