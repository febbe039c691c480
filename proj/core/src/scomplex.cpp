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

#include "riocomb/scomplex.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "riocomb/error.hpp"

namespace riocomb {

struct SimplicialComplex::Closure {
    std::once_flag once;
    std::vector<std::vector<Face>> by_dimension;
};

namespace {

bool strictly_increasing(const Face& f)
{
    return std::adjacent_find(f.begin(), f.end(), std::greater_equal<>()) == f.end();
}

std::vector<std::vector<Face>> close_small(const std::vector<Face>& facets, int dim)
{
    std::vector<std::unordered_set<std::uint64_t>> seen(static_cast<std::size_t>(dim + 1));
    for (const auto& f : facets) {
        const std::size_t s = f.size();
        for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << s); ++sub) {
            std::uint64_t mask = 0;
            int size = 0;
            for (std::size_t i = 0; i < s; ++i)
                if (sub >> i & 1U) {
                    mask |= std::uint64_t{1} << f[i];
                    ++size;
                }
            seen[static_cast<std::size_t>(size - 1)].insert(mask);
        }
    }
    std::vector<std::vector<Face>> out(seen.size());
    for (std::size_t d = 0; d < seen.size(); ++d) {
        out[d].reserve(seen[d].size());
        for (std::uint64_t mask : seen[d]) {
            Face face;
            for (int v = 0; mask != 0; ++v, mask >>= 1U)
                if (mask & 1U)
                    face.push_back(v);
            out[d].push_back(std::move(face));
        }
        std::sort(out[d].begin(), out[d].end());
    }
    return out;
}

std::vector<std::vector<Face>> close_general(const std::vector<Face>& facets, int dim)
{
    std::vector<std::set<Face>> seen(static_cast<std::size_t>(dim + 1));
    for (const auto& f : facets) {
        if (f.size() >= 63)
            throw Error(Errc::SearchCapExceeded, "facet too large to enumerate its faces");
        const std::size_t s = f.size();
        for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << s); ++sub) {
            Face face;
            for (std::size_t i = 0; i < s; ++i)
                if (sub >> i & 1U)
                    face.push_back(f[i]);
            seen[face.size() - 1].insert(std::move(face));
        }
    }
    std::vector<std::vector<Face>> out(seen.size());
    for (std::size_t d = 0; d < seen.size(); ++d)
        out[d].assign(seen[d].begin(), seen[d].end());
    return out;
}

} // namespace

SimplicialComplex::SimplicialComplex() : closure_(std::make_shared<Closure>()) {}

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<Face> facets)
    : vertex_count_(vertex_count), facets_(std::move(facets)), closure_(std::make_shared<Closure>())
{
    std::vector<char> used(vertex_count_, 0);
    for (const auto& f : facets_) {
        if (f.empty())
            throw Error(Errc::InvalidComplex, "empty facet");
        if (!strictly_increasing(f))
            throw Error(Errc::InvalidComplex, "facet vertices must be strictly increasing");
        if (f.front() < 0 || static_cast<std::size_t>(f.back()) >= vertex_count_)
            throw Error(Errc::InvalidComplex, "facet vertex outside 0.." + std::to_string(vertex_count_) + "-1");
        for (Vertex v : f)
            used[static_cast<std::size_t>(v)] = 1;
        dimension_ = std::max(dimension_, static_cast<int>(f.size()) - 1);
    }
    if (std::find(used.begin(), used.end(), 0) != used.end())
        throw Error(Errc::InvalidComplex, "every vertex must lie in some facet");
    std::sort(facets_.begin(), facets_.end());
    if (std::adjacent_find(facets_.begin(), facets_.end()) != facets_.end())
        throw Error(Errc::InvalidComplex, "duplicate facet");
    // Only facets of different sizes can be nested.
    if (!is_pure()) {
        for (const auto& small : facets_)
            for (const auto& big : facets_)
                if (small.size() < big.size() &&
                    std::includes(big.begin(), big.end(), small.begin(), small.end()))
                    throw Error(Errc::InvalidComplex, "facet contained in another facet");
    }
}

SimplicialComplex SimplicialComplex::generated_by(std::vector<Face> generators)
{
    std::erase_if(generators, [](const Face& f) { return f.empty(); });
    for (auto& g : generators) {
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
    }
    std::sort(generators.begin(), generators.end(),
              [](const Face& a, const Face& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    std::vector<Face> maximal;
    for (auto& g : generators) {
        const bool nested = std::any_of(maximal.begin(), maximal.end(), [&](const Face& m) {
            return m.size() > g.size() && std::includes(m.begin(), m.end(), g.begin(), g.end());
        });
        if (!nested)
            maximal.push_back(std::move(g));
    }
    std::vector<Vertex> vertices;
    for (const auto& f : maximal)
        vertices.insert(vertices.end(), f.begin(), f.end());
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (auto& f : maximal)
        for (auto& v : f)
            v = static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
    return {vertices.size(), std::move(maximal)};
}

SimplicialComplex SimplicialComplex::simplex(std::size_t dimension)
{
    Face f(dimension + 1);
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = static_cast<Vertex>(i);
    return {dimension + 1, {f}};
}

SimplicialComplex SimplicialComplex::simplex_boundary(std::size_t dimension)
{
    std::vector<Face> facets;
    for (std::size_t skip = 0; skip <= dimension; ++skip) {
        Face f;
        for (std::size_t i = 0; i <= dimension; ++i)
            if (i != skip)
                f.push_back(static_cast<Vertex>(i));
        facets.push_back(std::move(f));
    }
    return {dimension + 1, std::move(facets)};
}

SimplicialComplex SimplicialComplex::discrete(std::size_t points)
{
    std::vector<Face> facets;
    for (std::size_t i = 0; i < points; ++i)
        facets.push_back({static_cast<Vertex>(i)});
    return {points, std::move(facets)};
}

bool SimplicialComplex::is_pure() const
{
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return static_cast<int>(f.size()) - 1 == dimension_; });
}

const std::vector<std::vector<Face>>& SimplicialComplex::faces_by_dimension() const
{
    std::call_once(closure_->once, [this] {
        closure_->by_dimension = vertex_count_ <= 64 ? close_small(facets_, dimension_)
                                                     : close_general(facets_, dimension_);
    });
    return closure_->by_dimension;
}

std::size_t SimplicialComplex::face_count() const
{
    std::size_t n = 0;
    for (const auto& group : faces_by_dimension())
        n += group.size();
    return n;
}

bool SimplicialComplex::contains(const Face& face) const
{
    if (face.empty())
        return true;
    const auto& groups = faces_by_dimension();
    if (face.size() > groups.size())
        return false;
    const auto& g = groups[face.size() - 1];
    return std::binary_search(g.begin(), g.end(), face);
}

std::vector<Face> enumerate_faces(const SimplicialComplex& k)
{
    std::vector<Face> out;
    for (const auto& group : k.faces_by_dimension())
        out.insert(out.end(), group.begin(), group.end());
    return out;
}

FVector f_vector(const SimplicialComplex& k)
{
    FVector f;
    for (const auto& group : k.faces_by_dimension())
        f.entries.emplace_back(group.size());
    return f;
}

ExtendedFVector extend(const FVector& f)
{
    ExtendedFVector ef;
    ef.entries.reserve(f.entries.size() + 1);
    ef.entries.emplace_back(1);
    ef.entries.insert(ef.entries.end(), f.entries.begin(), f.entries.end());
    return ef;
}

ExtendedFVector extended_f_vector(const SimplicialComplex& k) { return extend(f_vector(k)); }

long long euler_characteristic(const SimplicialComplex& k)
{
    long long chi = 0;
    long long sign = 1;
    for (const auto& group : k.faces_by_dimension()) {
        chi += sign * static_cast<long long>(group.size());
        sign = -sign;
    }
    return chi;
}

namespace {

void require_extended(const ExtendedFVector& ef)
{
    if (ef.entries.empty() || ef.entries.front() != 1)
        throw Error(Errc::DimensionMismatch, "extended f-vector must start with f_{-1} = 1");
}

PowerSeries series_of(const std::vector<Integer>& v, std::size_t trunc)
{
    const auto r = to_rationals(v);
    return PowerSeries::polynomial(std::span<const Rational>(r), trunc);
}

std::vector<Integer> integer_prefix(const PowerSeries& s, std::size_t n)
{
    std::vector<Integer> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(to_integer(s[k]));
    return out;
}

// (1 - x)^e as an exact series.
PowerSeries one_minus_x_pow(unsigned e, std::size_t trunc)
{
    return PowerSeries::polynomial({1, -1}, trunc).pow(e);
}

RiordanPair f_to_h_pair(int d)
{
    const auto n = static_cast<std::size_t>(d + 2);
    return {one_minus_x_pow(static_cast<unsigned>(d + 2), n), PowerSeries::polynomial({1, -1}, n)};
}

} // namespace

HVector h_from_f_direct(const ExtendedFVector& ef)
{
    require_extended(ef);
    const long d = ef.dimension();
    HVector h;
    for (long k = 0; k <= d + 1; ++k) {
        Integer hk = 0;
        for (long i = 0; i <= k; ++i) {
            const Integer term = binomial(d + 1 - i, d + 1 - k) * ef.entries[static_cast<std::size_t>(i)];
            hk += ((k - i) % 2 == 0) ? term : Integer(-term);
        }
        h.entries.push_back(hk);
    }
    return h;
}

HVector h_from_f_riordan(const ExtendedFVector& ef)
{
    require_extended(ef);
    const int d = ef.dimension();
    const auto n = static_cast<std::size_t>(d + 2);
    const PowerSeries q = f_to_h_pair(d).apply(series_of(ef.entries, n));
    return {integer_prefix(q, n)};
}

HVector h_from_f(const ExtendedFVector& ef)
{
    HVector h = h_from_f_riordan(ef);
    if (h != h_from_f_direct(ef))
        throw std::logic_error("h-vector: Riordan transform disagrees with the summation formula");
    return h;
}

ExtendedFVector f_from_h(const HVector& h)
{
    if (h.entries.empty())
        throw Error(Errc::DimensionMismatch, "empty h-vector");
    const int d = static_cast<int>(h.entries.size()) - 2;
    const auto n = h.entries.size();
    const PowerSeries f = f_to_h_pair(d).inverse().apply(series_of(h.entries, n));
    return {integer_prefix(f, n)};
}

GVector g_from_h(const HVector& h)
{
    if (h.entries.empty())
        throw Error(Errc::DimensionMismatch, "empty h-vector");
    const std::size_t n = h.entries.size() + 1;
    const RiordanPair diff(PowerSeries::polynomial({1, -1}, n), PowerSeries::constant(1, n));
    return {integer_prefix(diff.apply(series_of(h.entries, n)), n)};
}

GammaSeries gamma_from_h(const HVector& h, std::size_t trunc)
{
    if (h.entries.empty())
        throw Error(Errc::DimensionMismatch, "empty h-vector");
    const int d = static_cast<int>(h.entries.size()) - 2;
    const std::size_t n = trunc == 0 ? std::max<std::size_t>(h.entries.size(), 2) : trunc;
    const PowerSeries one_plus_x = PowerSeries::polynomial({1, 1}, n);
    const RiordanPair t(one_plus_x.pow(static_cast<unsigned>(d + 3)), one_plus_x.pow(2));
    const PowerSeries gamma = t.inverse().apply(series_of(h.entries, n));

    GammaSeries out;
    out.entries.assign(gamma.coeffs().begin(), gamma.coeffs().end());
    out.vector_length = static_cast<std::size_t>((d + 1) / 2) + 1;
    out.is_vector = std::all_of(out.entries.begin() + static_cast<std::ptrdiff_t>(std::min(out.vector_length, n)),
                                out.entries.end(), [](const Rational& c) { return c == 0; });
    return out;
}

bool is_palindromic(const HVector& h)
{
    return std::equal(h.entries.begin(), h.entries.end(), h.entries.rbegin());
}

FiniteMatrix ds_involution(int d)
{
    const auto n = static_cast<std::size_t>(d + 2);
    const PowerSeries one_plus_x = PowerSeries::polynomial({1, 1}, n);
    const RiordanPair t(-one_plus_x.pow(static_cast<unsigned>(d + 2)), -one_plus_x);
    return t.finite(n - 1);
}

DehnSommervilleCheck ds_check(const ExtendedFVector& ef)
{
    require_extended(ef);
    const int d = ef.dimension();
    std::vector<Rational> reversed;
    for (auto it = ef.entries.rbegin(); it != ef.entries.rend(); ++it)
        reversed.emplace_back(*it);
    const auto image = ds_involution(d).apply(reversed);

    DehnSommervilleCheck out;
    out.eigen_residual.resize(reversed.size());
    for (std::size_t i = 0; i < reversed.size(); ++i)
        out.eigen_residual[i] = image[i] - reversed[i];
    out.eigenvector = std::all_of(out.eigen_residual.begin(), out.eigen_residual.end(),
                                  [](const Rational& r) { return r == 0; });
    out.h = h_from_f(ef);
    out.h_palindromic = is_palindromic(out.h);
    if (out.eigenvector != out.h_palindromic)
        throw std::logic_error("Dehn-Sommerville: eigenvector test disagrees with h-palindromy");
    out.satisfied = out.eigenvector;
    return out;
}

std::vector<std::vector<Rational>> ds_basis(int d)
{
    if (d < 0)
        throw Error(Errc::InvalidParameters, "ds_basis needs d >= 0");
    const auto n = static_cast<std::size_t>(d + 2);
    const RiordanPair t(binomial_series(Rational(d, 2) + 1, n), binomial_series(Rational(1, 2), n));
    const FiniteMatrix m = t.finite(n - 1);
    std::vector<std::vector<Rational>> cols;
    for (std::size_t j = 0; j < n; j += 2)
        cols.push_back(m.column(j));
    return cols;
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l)
{
    const auto offset = static_cast<Vertex>(k.vertex_count());
    const std::vector<Face> empty_only{Face{}};
    const auto& left = k.is_empty() ? empty_only : k.facets();
    const auto& right = l.is_empty() ? empty_only : l.facets();
    std::vector<Face> facets;
    facets.reserve(left.size() * right.size());
    for (const auto& s : left)
        for (const auto& t : right) {
            Face f = s;
            for (Vertex v : t)
                f.push_back(v + offset);
            if (!f.empty())
                facets.push_back(std::move(f));
        }
    return {k.vertex_count() + l.vertex_count(), std::move(facets)};
}

SimplicialComplex q_cone(const SimplicialComplex& k, int q)
{
    if (q < 1)
        throw Error(Errc::InvalidQ, "q-cone needs q >= 1, got " + std::to_string(q));
    return join(k, SimplicialComplex::discrete(static_cast<std::size_t>(q)));
}

} // namespace riocomb
