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
#include <set>

#include "riocomb/error.hpp"
#include "riocomb/scomplex.hpp"

namespace riocomb {

namespace {

using FacetList = std::vector<Face>;

Face without(const Face& f, const Face& sigma)
{
    Face out;
    std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const Face& small, const Face& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Maximal nonempty members, sorted.
FacetList maximal(FacetList gens)
{
    std::erase_if(gens, [](const Face& f) { return f.empty(); });
    std::sort(gens.begin(), gens.end(),
              [](const Face& a, const Face& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    FacetList out;
    for (auto& g : gens)
        if (std::none_of(out.begin(), out.end(),
                         [&](const Face& m) { return m.size() > g.size() && is_subset(g, m); }))
            out.push_back(std::move(g));
    std::sort(out.begin(), out.end());
    return out;
}

void require_face(const SimplicialComplex& k, const Face& sigma)
{
    if (!std::is_sorted(sigma.begin(), sigma.end()) || !k.contains(sigma))
        throw Error(Errc::NotAFace, "not a face of the complex");
}

void require_size(const SimplicialComplex& k, const SearchLimits& limits)
{
    if (k.face_count() + 1 > limits.max_faces)
        throw Error(Errc::SearchCapExceeded, std::to_string(k.face_count() + 1) + " faces exceed the cap of " +
                                                 std::to_string(limits.max_faces));
}

// Relabels vertices onto 0..v-1 so that memo keys ignore labels.
FacetList compact(const FacetList& facets)
{
    std::vector<Vertex> vs;
    for (const auto& f : facets)
        vs.insert(vs.end(), f.begin(), f.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    FacetList out = facets;
    for (auto& f : out)
        for (auto& v : f)
            v = static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    std::sort(out.begin(), out.end());
    return out;
}

class VertexDecomposition {
public:
    bool decide(const FacetList& facets)
    {
        if (facets.size() <= 1)
            return true;
        FacetList key = compact(facets);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        std::set<Vertex> vertices;
        for (const auto& f : facets)
            vertices.insert(f.begin(), f.end());
        bool result = false;
        for (Vertex x : vertices) {
            FacetList del_gens;
            FacetList lk_gens;
            for (const auto& f : facets) {
                if (std::binary_search(f.begin(), f.end(), x)) {
                    del_gens.push_back(without(f, {x}));
                    lk_gens.push_back(without(f, {x}));
                } else {
                    del_gens.push_back(f);
                }
            }
            FacetList del = maximal(std::move(del_gens));
            // Shedding: the deletion keeps only old facets.
            const bool shedding = std::all_of(del.begin(), del.end(), [&](const Face& f) {
                return std::binary_search(facets.begin(), facets.end(), f);
            });
            if (shedding && decide(del) && decide(maximal(std::move(lk_gens)))) {
                result = true;
                break;
            }
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    std::map<FacetList, bool> memo_;
};

class ShellingSearch {
public:
    explicit ShellingSearch(const FacetList& facets) : facets_(facets), used_(facets.size(), false) {}

    std::optional<FacetList> run()
    {
        if (!extend())
            return std::nullopt;
        return order_;
    }

private:
    // The new faces of F form a single interval [R, F].
    bool fits(const Face& f) const
    {
        const std::size_t s = f.size();
        std::vector<std::uint64_t> meets;
        for (const auto& g : order_) {
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < s; ++i)
                if (std::binary_search(g.begin(), g.end(), f[i]))
                    mask |= std::uint64_t{1} << i;
            meets.push_back(mask);
        }
        const std::uint64_t full = (std::uint64_t{1} << s) - 1;
        auto old = [&](std::uint64_t sub) {
            return std::any_of(meets.begin(), meets.end(), [&](std::uint64_t m) { return (sub & ~m) == 0; });
        };
        std::uint64_t restriction = 0;
        for (std::size_t i = 0; i < s; ++i)
            if (old(full & ~(std::uint64_t{1} << i)))
                restriction |= std::uint64_t{1} << i;
        for (std::uint64_t sub = 0; sub <= full; ++sub)
            if (old(sub) != ((restriction & ~sub) != 0))
                return false;
        return true;
    }

    bool extend()
    {
        if (order_.size() == facets_.size())
            return true;
        if (failed_.contains(used_))
            return false;
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (used_[i] || !fits(facets_[i]))
                continue;
            used_[i] = true;
            order_.push_back(facets_[i]);
            if (extend())
                return true;
            order_.pop_back();
            used_[i] = false;
        }
        failed_.insert(used_);
        return false;
    }

    const FacetList& facets_;
    std::vector<bool> used_;
    FacetList order_;
    std::set<std::vector<bool>> failed_;
};

} // namespace

SimplicialComplex link(const SimplicialComplex& k, const Face& sigma)
{
    require_face(k, sigma);
    FacetList gens;
    for (const auto& f : k.facets())
        if (is_subset(sigma, f))
            gens.push_back(without(f, sigma));
    return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex deletion(const SimplicialComplex& k, const Face& sigma)
{
    require_face(k, sigma);
    FacetList gens;
    for (const auto& f : k.facets())
        gens.push_back(without(f, sigma));
    return SimplicialComplex::generated_by(std::move(gens));
}

bool is_vertex_decomposable(const SimplicialComplex& k, SearchLimits limits)
{
    require_size(k, limits);
    VertexDecomposition vd;
    return vd.decide(k.facets());
}

std::optional<std::vector<Face>> find_shelling(const SimplicialComplex& k, SearchLimits limits)
{
    if (!k.is_pure())
        throw Error(Errc::NotPure, "shellings are searched for pure complexes only");
    require_size(k, limits);
    if (k.is_empty())
        return std::vector<Face>{};
    if (k.facets().front().size() > 62)
        throw Error(Errc::SearchCapExceeded, "facet too large");
    return ShellingSearch(k.facets()).run();
}

bool is_shellable(const SimplicialComplex& k, SearchLimits limits) { return find_shelling(k, limits).has_value(); }

} // namespace riocomb
