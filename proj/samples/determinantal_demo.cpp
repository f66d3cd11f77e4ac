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

// Symbolic-power invariants of 2-minors of a generic 3x4 matrix, and a
// containment certificate for a product of minors.

#include <iostream>

#include "symcontain/symcontain.hpp"

int main() {
  using namespace symcontain;
  const auto shape = MatrixShape::generic(3, 4, 2);
  std::cout << "height " << shape.height() << '\n';
  for (std::int64_t k = 1; k <= 5; ++k) {
    std::cout << "k=" << k << "  alpha " << det_alpha(shape, k) << "  omega " << det_omega(shape, k) << '\n';
  }

  const SizeMultiset sizes(shape, {3, 3, 3, 3, 2, 2, 2, 2});
  const auto cert = det_certify_containment(shape, sizes, 2, 2, 1, ContainmentMode::general);
  std::cout << to_json(cert).dump(2) << '\n';
  return det_verify_certificate(cert) ? 0 : 1;
}
