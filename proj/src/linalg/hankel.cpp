/*
 * Copyright 2026 The Ellipsum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ellipsum/matrix.hpp"

namespace ellipsum::linalg {

core::MultiPoly vandermonde_squared(std::size_t m) {
  core::MultiPoly v = core::MultiPoly::constant(m, Rat(1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const core::MultiPoly d = core::MultiPoly::variable(m, j) - core::MultiPoly::variable(m, i);
      v = v * d * d;
    }
  }
  return v;
}

}  // namespace ellipsum::linalg
