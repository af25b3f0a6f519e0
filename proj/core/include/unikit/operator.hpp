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

#include "unikit/linalg.hpp"
#include "unikit/sectors.hpp"

namespace unikit {

/// Dense operator on a sector, in the basis order of enumerate_basis.
struct Operator {
  SectorDescriptor sector;
  ComplexMatrix matrix;

  Eigen::Index dim() const { return matrix.rows(); }
};

/// Throws kInvalidArgument unless op.matrix is square of the sector dimension.
void check_operator_shape(const Operator& op);

}  // namespace unikit
