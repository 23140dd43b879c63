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

#ifndef ELLIPSUM_MULTIPOLY_HPP
#define ELLIPSUM_MULTIPOLY_HPP

#include <map>
#include <vector>

#include "ellipsum/rational.hpp"

namespace ellipsum::core {

/// Sparse polynomial in a fixed number of variables; exponents may be
/// negative (Laurent monomials). Terms with zero coefficient are dropped.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rat& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponents, Rat>& terms() const noexcept { return terms_; }
  Rat coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rat& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rat& c);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  Rat evaluate(const std::vector<Rat>& xs) const;

 private:
  std::size_t nvars_;
  std::map<Exponents, Rat> terms_;
};

}  // namespace ellipsum::core

#endif  // ELLIPSUM_MULTIPOLY_HPP
