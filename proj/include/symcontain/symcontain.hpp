// Copyright 2026 The symcontain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMCONTAIN_SYMCONTAIN_HPP
#define SYMCONTAIN_SYMCONTAIN_HPP

#include "symcontain/core.hpp"
#include "symcontain/rational_lp.hpp"
#include "symcontain/star.hpp"
#include "symcontain/determinantal.hpp"
#include "symcontain/points.hpp"
#include "symcontain/monomial_ideal.hpp"
#include "symcontain/certificate_json.hpp"

#endif  // SYMCONTAIN_SYMCONTAIN_HPP
