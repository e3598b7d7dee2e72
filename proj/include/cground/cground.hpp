// Copyright 2026 The cground Authors.
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

// Umbrella header.

#pragma once

#include "cground/proposition.hpp"
#include "cground/scales.hpp"
#include "cground/logic.hpp"
#include "cground/utterance.hpp"
#include "cground/info_structure.hpp"
#include "cground/ground.hpp"
#include "cground/classifier.hpp"
#include "cground/engine.hpp"
#include "cground/transcript.hpp"
#include "cground/stats.hpp"
#include "cground/golden.hpp"
