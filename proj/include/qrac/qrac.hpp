// Copyright 2026 The qrac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Umbrella header for the whole library except the JSON wire format
// (qrac/strategy_json.hpp), which pulls in the vendored nlohmann/json.

#include "qrac/bloch_basis.hpp"
#include "qrac/bloch_geometry.hpp"
#include "qrac/hermitian.hpp"
#include "qrac/lemma_oracles.hpp"
#include "qrac/optimizer.hpp"
#include "qrac/qrac_core.hpp"
#include "qrac/rng.hpp"
#include "qrac/sampling.hpp"
#include "qrac/tolerances.hpp"
