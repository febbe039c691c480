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

#include <algorithm>
#include <cstdint>
#include <map>

#include "riocomb/error.hpp"
#include "riocomb/scomplex.hpp"

namespace riocomb {

namespace {

bool is_subset(const Face& small, const Face& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Face face_difference(const Face& a, const Face& b)
{
    Face out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Face face_union(const Face& a, const Face& b)
{
    Face out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Faces of the interval [lo, hi] for lo a subset of hi.
template <typename Visit>
void for_each_in_interval(const Face& lo, const Face& hi, Visit&& visit)
{
    const Face free = face_difference(hi, lo);
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t sub = 0; sub < total; ++sub) {
        Face extra;
        for (std::size_t i = 0; i < free.size(); ++i)
            if (sub >> i & 1U)
                extra.push_back(free[i]);
        if (!visit(face_union(lo, extra)))
            return;
    }
}

// All faces, empty face first, then by size and lexicographically.
std::vector<Face> all_faces(const SimplicialComplex& k)
{
    std::vector<Face> faces{Face{}};
    auto rest = enumerate_faces(k);
    faces.insert(faces.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
    return faces;
}

class FacingSearch {
public:
    explicit FacingSearch(const SimplicialComplex& k) : k_(k), faces_(all_faces(k))
    {
        for (std::size_t i = 0; i < faces_.size(); ++i)
            index_.emplace(faces_[i], i);
        covered_.assign(faces_.size(), 0);
        phi_.assign(k.facets().size(), std::nullopt);
    }

    std::optional<ExactFacing> run()
    {
        if (!solve(0))
            return std::nullopt;
        ExactFacing out;
        for (std::size_t t = 0; t < phi_.size(); ++t)
            out.assignment.emplace_back(k_.facets()[t], *phi_[t]);
        return out;
    }

private:
    bool solve(std::size_t cursor)
    {
        while (cursor < faces_.size() && covered_[cursor])
            ++cursor;
        if (cursor == faces_.size())
            return true;
        const Face& sigma = faces_[cursor];
        const auto& facets = k_.facets();
        for (std::size_t t = 0; t < facets.size(); ++t) {
            if (phi_[t] || !is_subset(sigma, facets[t]))
                continue;
            std::vector<std::size_t> interval;
            bool free = true;
            for_each_in_interval(sigma, facets[t], [&](const Face& f) {
                const std::size_t i = index_.at(f);
                if (covered_[i]) {
                    free = false;
                    return false;
                }
                interval.push_back(i);
                return true;
            });
            if (!free)
                continue;
            for (std::size_t i : interval)
                covered_[i] = 1;
            phi_[t] = sigma;
            if (solve(cursor + 1))
                return true;
            phi_[t].reset();
            for (std::size_t i : interval)
                covered_[i] = 0;
        }
        return false;
    }

    const SimplicialComplex& k_;
    std::vector<Face> faces_;
    std::map<Face, std::size_t> index_;
    std::vector<char> covered_;
    std::vector<std::optional<Face>> phi_;
};

} // namespace

void validate_facing(const SimplicialComplex& k, const ExactFacing& phi)
{
    if (k.is_empty())
        throw Error(Errc::InvalidFacing, "the empty complex has no facets to face");
    std::vector<Face> listed;
    for (const auto& [facet, low] : phi.assignment) {
        if (!is_subset(low, facet))
            throw Error(Errc::InvalidFacing, "phi(t) must be a subset of t");
        listed.push_back(facet);
    }
    std::sort(listed.begin(), listed.end());
    if (listed != k.facets())
        throw Error(Errc::InvalidFacing, "assignment must list every facet exactly once");

    std::map<Face, int> hits;
    for (const auto& [facet, low] : phi.assignment)
        for_each_in_interval(low, facet, [&](const Face& f) {
            ++hits[f];
            return true;
        });
    for (const auto& [face, count] : hits)
        if (count != 1)
            throw Error(Errc::InvalidFacing, "intervals overlap");
    if (hits.size() != k.face_count() + 1)
        throw Error(Errc::InvalidFacing, "intervals do not cover every face");
}

std::optional<ExactFacing> find_exact_facing(const SimplicialComplex& k, SearchLimits limits)
{
    if (!k.is_pure())
        throw Error(Errc::NotPure, "exact facings are defined for pure complexes");
    if (k.is_empty())
        return std::nullopt;
    if (k.face_count() + 1 > limits.max_faces)
        throw Error(Errc::SearchCapExceeded, std::to_string(k.face_count() + 1) + " faces exceed the cap of " +
                                                 std::to_string(limits.max_faces));
    return FacingSearch(k).run();
}

HVector facing_h_counts(const SimplicialComplex& k, const ExactFacing& phi)
{
    validate_facing(k, phi);
    HVector h;
    h.entries.assign(static_cast<std::size_t>(k.dimension() + 2), 0);
    for (const auto& [facet, low] : phi.assignment)
        ++h.entries[low.size()];
    return h;
}

ExactFacing qcone_facing(const SimplicialComplex& k, const ExactFacing& phi, int q)
{
    if (q < 1)
        throw Error(Errc::InvalidQ, "q-cone needs q >= 1, got " + std::to_string(q));
    validate_facing(k, phi);
    const auto apex = static_cast<Vertex>(k.vertex_count());
    ExactFacing out;
    for (const auto& [facet, low] : phi.assignment)
        for (int i = 0; i < q; ++i) {
            Face t = facet;
            t.push_back(apex + i);
            Face l = low;
            if (i > 0)
                l.push_back(apex + i);
            out.assignment.emplace_back(std::move(t), std::move(l));
        }
    std::sort(out.assignment.begin(), out.assignment.end());
    return out;
}

} // namespace riocomb
