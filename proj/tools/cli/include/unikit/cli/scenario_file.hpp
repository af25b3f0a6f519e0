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
#include <string>

#include "unikit/classifier.hpp"
#include "unikit/hamiltonian_spec.hpp"

namespace unikit::cli {

/// Parsed scenario file before operator assembly.
struct ScenarioFile {
  SectorDescriptor sector;
  ExtensionKind kind = ExtensionKind::kHamiltonian;
  std::optional<HamiltonianSpec> spec;
  std::optional<double> time;
  std::optional<std::filesystem::path> matrix_file;
  bool hermitize = false;
  ScenarioOptions options;
};

/// Throws kInvalidScenario (or kInvalidToken with the JSON location) on
/// malformed input. Relative matrix paths are resolved against `base_dir`.
ScenarioFile parse_scenario(const std::string& json_text, const std::filesystem::path& base_dir = {});
ScenarioFile load_scenario(const std::filesystem::path& path);

/// Assembles the extension operator: the Hamiltonian, exp(-i time H), or
/// the matrix file contents.
Scenario build_scenario(const ScenarioFile& file);

/// "dim n" followed by n rows of n "re,im" pairs.
ComplexMatrix read_matrix_file(const std::filesystem::path& path);
ComplexMatrix parse_matrix_text(const std::string& text);
std::string format_matrix_text(const ComplexMatrix& m);

}  // namespace unikit::cli
