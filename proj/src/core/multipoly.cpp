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

#include "ellipsum/multipoly.hpp"

#include "ellipsum/error.hpp"

namespace ellipsum::core {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rat& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index, int power) {
  if (index >= nvars) throw Error(ErrorCode::InvalidParams, "variable index out of range");
  Exponents e(nvars, 0);
  e[index] = power;
  MultiPoly p(nvars);
  p.add_term(e, Rat(1));
  return p;
}

Rat MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rat& c) {
  if (e.size() != nvars_) throw Error(ErrorCode::InvalidParams, "exponent vector has wrong length");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::InvalidParams, "variable count mismatch");
  MultiPoly r(a.nvars_);
  MultiPoly::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& xs) const {
  if (xs.size() != nvars_) throw Error(ErrorCode::InvalidParams, "point has wrong dimension");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < nvars_; ++i) term *= pow(xs[i], e[i]);
    total += term;
  }
  return total;
}

}  // namespace ellipsum::core
