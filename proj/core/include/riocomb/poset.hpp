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

#ifndef RIOCOMB_POSET_HPP
#define RIOCOMB_POSET_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "riocomb/rational.hpp"
#include "riocomb/scomplex.hpp"

namespace riocomb {

/// Finite poset on 0..size()-1 stored as its full strict order relation.
class FinitePoset {
public:
    FinitePoset() = default;

    // Transitive closure of the given pairs (i < j). Throws Error(InvalidPoset)
    // on out-of-range elements or when the closure is not irreflexive.
    static FinitePoset from_relations(std::size_t size, const std::vector<std::pair<int, int>>& less);
    static FinitePoset chain(std::size_t size);
    static FinitePoset antichain(std::size_t size);

    std::size_t size() const noexcept { return n_; }
    bool less(int a, int b) const { return lt_[idx(a, b)] != 0; }
    bool leq(int a, int b) const { return a == b || less(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    // Strict relation pairs, lexicographically sorted.
    std::vector<std::pair<int, int>> relations() const;
    // Hasse diagram edges (a covered by b), sorted.
    std::vector<std::pair<int, int>> covers() const;
    // Subposet on the listed elements, relabeled 0..k-1 in the given order.
    FinitePoset induced(const std::vector<int>& elements) const;

    friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b); }

    std::size_t n_ = 0;
    std::vector<char> lt_;
};

// Disjoint union with every element of x below every element of y; the
// elements of y are shifted by x.size().
FinitePoset nh_join(const FinitePoset& x, const FinitePoset& y);

// Simplices are the nonempty chains; vertex i is element i.
SimplicialComplex order_complex(const FinitePoset& x);

// Nonempty faces ordered by strict inclusion; element i is enumerate_faces(k)[i].
FinitePoset face_poset(const SimplicialComplex& k);

// Number of chains with k + 1 elements, for k = 0 .. height.
FVector chain_f_vector(const FinitePoset& x);

enum class BeatKind { Down, Up };
struct BeatPoint {
    int element = 0;
    BeatKind kind = BeatKind::Down;
    friend bool operator==(const BeatPoint&, const BeatPoint&) = default;
};

// Sorted by element; an element that is both kinds appears once as Down.
std::vector<BeatPoint> beat_points(const FinitePoset& x);

struct CoreResult {
    FinitePoset core;
    // Original labels of the surviving elements.
    std::vector<int> kept;
};
// Removes the smallest beat point until none is left.
CoreResult core_with_labels(const FinitePoset& x);
FinitePoset core(const FinitePoset& x);

// Throws Error(SearchCapExceeded) when size() > cap.
Integer automorphism_count(const FinitePoset& x, std::size_t cap = 12);

// Longest chain minus one; -1 for the empty poset.
int height(const FinitePoset& x);
// Largest antichain.
std::size_t width(const FinitePoset& x);

// |det M| with M[i][j] = 0 if x_i <= x_j and 1 otherwise.
Integer poset_determinant(const FinitePoset& x);

/// Total order listed from bottom to top.
struct LinearExtension {
    std::vector<int> order;
};

bool is_linear_extension(const FinitePoset& x, const LinearExtension& e);
// x < y iff x precedes y in every extension, checked over all pairs.
bool realizes(const FinitePoset& x, const std::vector<LinearExtension>& extensions);

// The n-fold non-Hausdorff join of [q] over [m]. Level 0 is 0..m-1 and level
// j >= 1 is m+(j-1)q .. m+jq-1.
FinitePoset delta_poset(int m, int q, int n);

struct DimensionRealizer {
    FinitePoset poset;
    LinearExtension e1;
    LinearExtension e2;
    int dimension = 0;
    bool verified = false;
    // Present when the dimension is 2.
    std::optional<std::pair<int, int>> incomparable;
};
DimensionRealizer order_dimension_realizer(int m, int q, int n);

} // namespace riocomb

#endif
