// Copyright 2026 The jumpfeed Authors
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

#include "jumpfeed/errors.hpp"
#include "jumpfeed/experiments.hpp"
#include "jumpfeed/integrator.hpp"
#include "jumpfeed/linalg.hpp"
#include "jumpfeed/model.hpp"
#include "jumpfeed/observables.hpp"
#include "jumpfeed/parallel.hpp"
#include "jumpfeed/trajectories.hpp"
#include "jumpfeed/version.hpp"
