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

#ifndef RIOCOMB_SCOMPLEX_HPP
#define RIOCOMB_SCOMPLEX_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "riocomb/fps.hpp"
#include "riocomb/rational.hpp"
#include "riocomb/riordan.hpp"

namespace riocomb {

using Vertex = int;
/// A face is a strictly increasing list of vertex indices. The empty list is
/// the empty face.
using Face = std::vector<Vertex>;

/// Face counts (f_0, ..., f_d).
struct FVector {
    std::vector<Integer> entries;
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// (f_{-1}, f_0, ..., f_d) with f_{-1} = 1.
struct ExtendedFVector {
    std::vector<Integer> entries;

    // d, where the vector has d + 2 entries.
    int dimension() const { return static_cast<int>(entries.size()) - 2; }
    friend bool operator==(const ExtendedFVector&, const ExtendedFVector&) = default;
};

/// (h_0, ..., h_{d+1}).
struct HVector {
    std::vector<Integer> entries;
    friend bool operator==(const HVector&, const HVector&) = default;
};

/// (g_0, ..., g_{d+2}) with the convention h_{d+2} = 0.
struct GVector {
    std::vector<Integer> entries;
    friend bool operator==(const GVector&, const GVector&) = default;
};

/// Leading coefficients of the gamma series. `is_vector` is set when every
/// computed coefficient past index floor((d+1)/2) vanishes.
struct GammaSeries {
    std::vector<Rational> entries;
    bool is_vector = false;
    std::size_t vector_length = 0;
};

/// Abstract simplicial complex stored by its facets.
///
/// Vertices are 0 .. vertex_count()-1 and each of them lies in some facet.
/// The complex with no facets is the "empty" complex whose only face is the
/// empty face. The downward closure is computed on first use and cached.
class SimplicialComplex {
public:
    SimplicialComplex();
    // Throws Error(InvalidComplex) unless facets are nonempty strictly
    // increasing vertex lists, pairwise non-nested, covering every vertex.
    SimplicialComplex(std::size_t vertex_count, std::vector<Face> facets);

    // Maximal elements of the given generators, vertices relabeled in
    // increasing order onto 0..v-1. Empty generators are ignored.
    static SimplicialComplex generated_by(std::vector<Face> generators);
    static SimplicialComplex simplex(std::size_t dimension);
    static SimplicialComplex simplex_boundary(std::size_t dimension);
    static SimplicialComplex discrete(std::size_t points);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    const std::vector<Face>& facets() const noexcept { return facets_; }
    int dimension() const noexcept { return dimension_; }
    bool is_empty() const noexcept { return facets_.empty(); }
    bool is_pure() const;

    // Nonempty faces grouped by dimension, each group in lexicographic order.
    const std::vector<std::vector<Face>>& faces_by_dimension() const;
    std::size_t face_count() const;
    bool contains(const Face& face) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.vertex_count_ == b.vertex_count_ && a.facets_ == b.facets_;
    }

private:
    struct Closure;

    std::size_t vertex_count_ = 0;
    std::vector<Face> facets_;
    int dimension_ = -1;
    std::shared_ptr<Closure> closure_;
};

/// Limits for the brute-force searches.
struct SearchLimits {
    std::size_t max_faces = 5000;
};

// All nonempty faces, by dimension then lexicographically.
std::vector<Face> enumerate_faces(const SimplicialComplex& k);
FVector f_vector(const SimplicialComplex& k);
ExtendedFVector extended_f_vector(const SimplicialComplex& k);
ExtendedFVector extend(const FVector& f);
long long euler_characteristic(const SimplicialComplex& k);

// f -> h by the summation formula h_k = sum_i (-1)^{k-i} C(d+1-i, d+1-k) f_{i-1}.
HVector h_from_f_direct(const ExtendedFVector& ef);
// f -> h through T((1-x)^{d+2} | 1-x) acting on the extended f-polynomial.
HVector h_from_f_riordan(const ExtendedFVector& ef);
// Riordan route, cross-checked against the summation formula.
HVector h_from_f(const ExtendedFVector& ef);
// Inverse transform: T((1-x)^{d+2} | 1-x)^{-1} acting on the h-polynomial.
ExtendedFVector f_from_h(const HVector& h);

GVector g_from_h(const HVector& h);

// trunc == 0 picks max(d + 2, 2) coefficients.
GammaSeries gamma_from_h(const HVector& h, std::size_t trunc = 0);
bool is_palindromic(const HVector& h);

struct DehnSommervilleCheck {
    bool satisfied = false;
    // T_{d+1}(-(1+x)^{d+2} | -(1+x)) r - r for r = (f_d, ..., f_{-1}).
    std::vector<Rational> eigen_residual;
    bool eigenvector = false;
    HVector h;
    bool h_palindromic = false;
};
DehnSommervilleCheck ds_check(const ExtendedFVector& ef);
FiniteMatrix ds_involution(int d);

// Even-indexed columns of T_{d+1}((1+x)^{d/2+1} | sqrt(1+x)).
std::vector<std::vector<Rational>> ds_basis(int d);

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
// Throws Error(InvalidQ) for q < 1.
SimplicialComplex q_cone(const SimplicialComplex& k, int q);

/// facet -> phi(facet), one entry per facet in facet order.
struct ExactFacing {
    std::vector<std::pair<Face, Face>> assignment;
    friend bool operator==(const ExactFacing&, const ExactFacing&) = default;
};

// Throws Error(InvalidFacing) unless the intervals [phi(t), t] partition
// the faces of k, the empty face included.
void validate_facing(const SimplicialComplex& k, const ExactFacing& phi);
std::optional<ExactFacing> find_exact_facing(const SimplicialComplex& k, SearchLimits limits = {});
HVector facing_h_counts(const SimplicialComplex& k, const ExactFacing& phi);
ExactFacing qcone_facing(const SimplicialComplex& k, const ExactFacing& phi, int q);

// Both throw Error(NotAFace) when sigma is not a face of k.
SimplicialComplex link(const SimplicialComplex& k, const Face& sigma);
SimplicialComplex deletion(const SimplicialComplex& k, const Face& sigma);

bool is_vertex_decomposable(const SimplicialComplex& k, SearchLimits limits = {});
std::optional<std::vector<Face>> find_shelling(const SimplicialComplex& k, SearchLimits limits = {});
bool is_shellable(const SimplicialComplex& k, SearchLimits limits = {});

} // namespace riocomb

#endif
