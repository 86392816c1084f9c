// Copyright 2026 The mxt Authors. All Rights Reserved.
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

#ifndef MXT_MXT_HPP_
#define MXT_MXT_HPP_

#include "mxt/coding.hpp"
#include "mxt/core.hpp"
#include "mxt/integer_minimax.hpp"
#include "mxt/kraft.hpp"
#include "mxt/oracle.hpp"
#include "mxt/real_minimax.hpp"
#include "mxt/selection.hpp"

#endif  // MXT_MXT_HPP_
