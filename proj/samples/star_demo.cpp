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

// Least degrees, the Waldschmidt constant and one containment certificate
// for a star configuration of six general lines in P^3 (h = 2).

#include <iostream>

#include "symcontain/symcontain.hpp"

int main() {
  using namespace symcontain;
  const StarConfig cfg(6, 2);

  for (std::int64_t k = 1; k <= 6; ++k) std::cout << "alpha(I^(" << k << ")) = " << star_alpha(cfg, k) << '\n';
  std::cout << "Waldschmidt constant = " << to_string(star_waldschmidt(cfg)) << '\n';

  const ExponentVector a({5, 5, 4, 4, 3, 3});
  const auto cert = star_certify_containment(cfg, a, 2, 2, 1);
  std::cout << to_json(cert).dump(2) << '\n';
  return star_verify_certificate(cert) ? 0 : 1;
}
