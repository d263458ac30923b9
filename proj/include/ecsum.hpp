/*
 * Copyright 2026 The ecsum Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "ecsum/bounds.hpp"
#include "ecsum/characters.hpp"
#include "ecsum/combinat.hpp"
#include "ecsum/config.hpp"
#include "ecsum/curves.hpp"
#include "ecsum/endos.hpp"
#include "ecsum/error.hpp"
#include "ecsum/experiments.hpp"
#include "ecsum/extractor.hpp"
#include "ecsum/fields.hpp"
#include "ecsum/limits.hpp"
#include "ecsum/nafgen.hpp"
#include "ecsum/numtheory.hpp"
#include "ecsum/report.hpp"
#include "ecsum/rng.hpp"
#include "ecsum/sums.hpp"
