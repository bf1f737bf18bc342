// Copyright 2026 The Anchor Energy Authors.
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

#include "anchor/matrix.hpp"

namespace anchor {

/// Replaces each entry by the fraction of all n^2 entries strictly smaller
/// than it. Tied entries share a rank; the result lies in [0, 1) and depends
/// only on the order of the input values.
Matrix rank_transform(const Matrix& costs);

}  // namespace anchor
