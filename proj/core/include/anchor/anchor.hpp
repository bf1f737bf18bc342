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

#include "anchor/distribution.hpp"
#include "anchor/error.hpp"
#include "anchor/fenwick.hpp"
#include "anchor/graph.hpp"
#include "anchor/io.hpp"
#include "anchor/matrix.hpp"
#include "anchor/mmset.hpp"
#include "anchor/parallel.hpp"
#include "anchor/rank.hpp"
#include "anchor/stats.hpp"
#include "anchor/sweep.hpp"
#include "anchor/transport.hpp"
