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

#ifndef RIOCOMB_HOMOLOGY_HPP
#define RIOCOMB_HOMOLOGY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "riocomb/rational.hpp"
#include "riocomb/scomplex.hpp"

namespace riocomb {

/// Sparse integer matrix of the boundary map C_k -> C_{k-1}.
///
/// Rows are the (k-1)-faces in lexicographic order (the single empty face
/// when k = 0), columns the k-faces. Each column lists (row, entry) pairs
/// sorted by row.
struct BoundaryMatrix {
    int k = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::size_t, int>>> columns;

    int at(std::size_t row, std::size_t col) const;
    std::vector<std::vector<int>> dense() const;
};

// Valid for 0 <= k <= dim + 1; the top one has no columns.
BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int dim);

// Rank over the rationals by fraction-free column reduction.
std::size_t exact_rank(const BoundaryMatrix& m);

// True when the product of the two maps is the zero matrix.
bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper);

/// Reduced Betti numbers (b_0, ..., b_d) over the rationals.
struct BettiVector {
    std::vector<Integer> entries;
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

BettiVector reduced_betti(const SimplicialComplex& k);

// 1 + sum (-1)^k b_k.
Integer euler_from_betti(const BettiVector& b);

} // namespace riocomb

#endif
