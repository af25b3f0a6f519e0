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

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "unikit/linalg.hpp"

namespace unikit {

/// One second-quantized factor: n:i, hop:i:j, cr:i, an:i or maj:k.
/// Indices are 1-based; maj runs over 1..2d.
struct FactorToken {
  enum class Kind { kNumber, kHop, kCreate, kAnnihilate, kMajorana };

  Kind kind = Kind::kNumber;
  int i = 1;
  int j = 0;  // second index, hop only

  /// Parses the textual form. Errors carry the 1-based column of the
  /// offending character.
  static FactorToken parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const FactorToken&, const FactorToken&) = default;
};

struct HamiltonianTerm {
  Complex coeff{1.0, 0.0};
  std::vector<FactorToken> factors;

  friend bool operator==(const HamiltonianTerm&, const HamiltonianTerm&) = default;
};

/// Sum of coefficient-weighted factor products.
struct HamiltonianSpec {
  std::vector<HamiltonianTerm> terms;

  HamiltonianSpec& add(Complex coeff, std::vector<FactorToken> factors);
  /// Convenience: factors given in textual form, e.g. {"n:1", "hop:1:3"}.
  HamiltonianSpec& add(Complex coeff, const std::vector<std::string>& factors);
  HamiltonianSpec& add(Complex coeff, std::initializer_list<const char*> factors);

  friend bool operator==(const HamiltonianSpec&, const HamiltonianSpec&) = default;
};

namespace tokens {
FactorToken n(int i);
FactorToken hop(int i, int j);
FactorToken cr(int i);
FactorToken an(int i);
FactorToken maj(int k);
}  // namespace tokens

}  // namespace unikit
