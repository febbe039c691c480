/*
   Copyright 2026 The riocomb Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RIOCOMB_LINALG_HPP
#define RIOCOMB_LINALG_HPP

#include <optional>
#include <span>
#include <vector>

#include "riocomb/rational.hpp"
#include "riocomb/riordan.hpp"

namespace riocomb {

std::size_t rank(const FiniteMatrix& m);

// Some x with m x = b, or nullopt if b is outside the column span.
std::optional<std::vector<Rational>> solve(const FiniteMatrix& m, std::span<const Rational> b);

// Exact determinant of a square integer matrix (Bareiss elimination).
Integer determinant(std::vector<std::vector<Integer>> m);

} // namespace riocomb

#endif
