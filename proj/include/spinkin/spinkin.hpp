// Copyright 2026 The spinkin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINKIN_SPINKIN_HPP
#define SPINKIN_SPINKIN_HPP

#include "spinkin/errors.hpp"
#include "spinkin/matrix_kernel.hpp"
#include "spinkin/spin_algebra.hpp"
#include "spinkin/states.hpp"
#include "spinkin/state_io.hpp"
#include "spinkin/fs_kinematics.hpp"
#include "spinkin/bures_geometry.hpp"
#include "spinkin/rotational_averages.hpp"
#include "spinkin/entanglement_measures.hpp"
#include "spinkin/survey.hpp"

#endif  // SPINKIN_SPINKIN_HPP
