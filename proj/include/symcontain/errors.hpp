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

#ifndef SYMCONTAIN_ERRORS_HPP
#define SYMCONTAIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symcontain {

/// Malformed arguments: wrong lengths, out-of-range parameters.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A certify call was handed an element outside the required symbolic power.
class not_a_member : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A certificate construction step that the underlying argument guarantees
/// did not hold. Always a defect.
class algorithm_invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The linear inequality in r has nonpositive slope, so no threshold exists.
class no_threshold : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The point-count hypothesis is not met.
class refused : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace symcontain

#endif  // SYMCONTAIN_ERRORS_HPP
