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

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "unikit/error.hpp"

namespace unikit::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNonHermitian = 3;
inline constexpr int kExitAmbiguous = 4;

int exit_code_for(ErrorCode code);

struct ClassifyArgs {
  std::filesystem::path scenario;
  bool oracle = false;
  std::optional<double> tolerance;
  bool json = false;
};

struct OracleArgs {
  std::filesystem::path scenario;
  std::optional<int> max_rounds;
  std::optional<int> max_power;
  bool json = false;
};

int run_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err);
int run_repro(bool json, std::ostream& out, std::ostream& err);
int run_oracle_command(const OracleArgs& args, std::ostream& out, std::ostream& err);
int run_invariants(const std::string& sector, bool json, std::ostream& out, std::ostream& err);
int run_dims(const std::string& sector, bool json, std::ostream& out, std::ostream& err);

}  // namespace unikit::cli
