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

#include "riocomb/poset.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "riocomb/error.hpp"
#include "riocomb/linalg.hpp"

namespace riocomb {

FinitePoset FinitePoset::from_relations(std::size_t size, const std::vector<std::pair<int, int>>& less)
{
    FinitePoset p;
    p.n_ = size;
    p.lt_.assign(size * size, 0);
    for (const auto& [a, b] : less) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= size || static_cast<std::size_t>(b) >= size)
            throw Error(Errc::InvalidPoset, "relation (" + std::to_string(a) + "," + std::to_string(b) +
                                                ") outside 0.." + std::to_string(size) + "-1");
        p.lt_[p.idx(a, b)] = 1;
    }
    for (std::size_t k = 0; k < size; ++k)
        for (std::size_t i = 0; i < size; ++i)
            if (p.lt_[i * size + k])
                for (std::size_t j = 0; j < size; ++j)
                    if (p.lt_[k * size + j])
                        p.lt_[i * size + j] = 1;
    for (std::size_t i = 0; i < size; ++i)
        if (p.lt_[i * size + i])
            throw Error(Errc::InvalidPoset, "relation has a cycle through element " + std::to_string(i));
    return p;
}

FinitePoset FinitePoset::chain(std::size_t size)
{
    std::vector<std::pair<int, int>> rel;
    for (std::size_t i = 1; i < size; ++i)
        rel.emplace_back(static_cast<int>(i - 1), static_cast<int>(i));
    return from_relations(size, rel);
}

FinitePoset FinitePoset::antichain(std::size_t size) { return from_relations(size, {}); }

std::vector<std::pair<int, int>> FinitePoset::relations() const
{
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(n_);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (less(a, b))
                out.emplace_back(a, b);
    return out;
}

std::vector<std::pair<int, int>> FinitePoset::covers() const
{
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(n_);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!less(a, b))
                continue;
            bool direct = true;
            for (int c = 0; c < n && direct; ++c)
                direct = !(less(a, c) && less(c, b));
            if (direct)
                out.emplace_back(a, b);
        }
    return out;
}

FinitePoset FinitePoset::induced(const std::vector<int>& elements) const
{
    FinitePoset p;
    p.n_ = elements.size();
    p.lt_.assign(p.n_ * p.n_, 0);
    for (std::size_t i = 0; i < p.n_; ++i)
        for (std::size_t j = 0; j < p.n_; ++j)
            p.lt_[i * p.n_ + j] = lt_[idx(elements[i], elements[j])];
    return p;
}

FinitePoset nh_join(const FinitePoset& x, const FinitePoset& y)
{
    const int off = static_cast<int>(x.size());
    auto rel = x.relations();
    for (const auto& [a, b] : y.relations())
        rel.emplace_back(a + off, b + off);
    for (int a = 0; a < off; ++a)
        for (int b = 0; b < static_cast<int>(y.size()); ++b)
            rel.emplace_back(a, b + off);
    return FinitePoset::from_relations(x.size() + y.size(), rel);
}

namespace {

// Elements sorted so that every element comes after everything below it.
std::vector<int> bottom_up(const FinitePoset& x)
{
    const int n = static_cast<int>(x.size());
    std::vector<int> below(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (x.less(b, a))
                ++below[static_cast<std::size_t>(a)];
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return below[static_cast<std::size_t>(a)] < below[static_cast<std::size_t>(b)]; });
    return order;
}

// Length of the longest chain ending at each element, minus one.
std::vector<int> levels(const FinitePoset& x)
{
    std::vector<int> lvl(x.size(), 0);
    for (int a : bottom_up(x))
        for (int b = 0; b < static_cast<int>(x.size()); ++b)
            if (x.less(b, a))
                lvl[static_cast<std::size_t>(a)] =
                    std::max(lvl[static_cast<std::size_t>(a)], lvl[static_cast<std::size_t>(b)] + 1);
    return lvl;
}

} // namespace

SimplicialComplex order_complex(const FinitePoset& x)
{
    const int n = static_cast<int>(x.size());
    std::vector<std::vector<int>> up(static_cast<std::size_t>(n));
    std::vector<char> has_below(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : x.covers()) {
        up[static_cast<std::size_t>(a)].push_back(b);
        has_below[static_cast<std::size_t>(b)] = 1;
    }
    std::vector<Face> facets;
    Face path;
    auto walk = [&](auto&& self, int v) -> void {
        path.push_back(v);
        if (up[static_cast<std::size_t>(v)].empty()) {
            Face f = path;
            std::sort(f.begin(), f.end());
            facets.push_back(std::move(f));
        }
        for (int w : up[static_cast<std::size_t>(v)])
            self(self, w);
        path.pop_back();
    };
    for (int v = 0; v < n; ++v)
        if (!has_below[static_cast<std::size_t>(v)])
            walk(walk, v);
    return {x.size(), std::move(facets)};
}

FinitePoset face_poset(const SimplicialComplex& k)
{
    const auto faces = enumerate_faces(k);
    std::vector<std::pair<int, int>> rel;
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = 0; j < faces.size(); ++j)
            if (faces[i].size() < faces[j].size() &&
                std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end()))
                rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return FinitePoset::from_relations(faces.size(), rel);
}

FVector chain_f_vector(const FinitePoset& x)
{
    const std::size_t n = x.size();
    if (n == 0)
        return {};
    const auto h = static_cast<std::size_t>(height(x));
    // ending[a][l]: chains with l + 1 elements whose top is a.
    std::vector<std::vector<Integer>> ending(n, std::vector<Integer>(h + 1, 0));
    FVector f;
    f.entries.assign(h + 1, 0);
    for (int a : bottom_up(x)) {
        auto& row = ending[static_cast<std::size_t>(a)];
        row[0] = 1;
        for (int b = 0; b < static_cast<int>(n); ++b)
            if (x.less(b, a))
                for (std::size_t l = 1; l <= h; ++l)
                    row[l] += ending[static_cast<std::size_t>(b)][l - 1];
        for (std::size_t l = 0; l <= h; ++l)
            f.entries[l] += row[l];
    }
    return f;
}

std::vector<BeatPoint> beat_points(const FinitePoset& x)
{
    const int n = static_cast<int>(x.size());
    std::vector<BeatPoint> out;
    for (int a = 0; a < n; ++a) {
        std::vector<int> below;
        std::vector<int> above;
        for (int b = 0; b < n; ++b) {
            if (x.less(b, a))
                below.push_back(b);
            if (x.less(a, b))
                above.push_back(b);
        }
        const bool down = std::any_of(below.begin(), below.end(), [&](int top) {
            return std::all_of(below.begin(), below.end(), [&](int b) { return x.leq(b, top); });
        });
        const bool up = std::any_of(above.begin(), above.end(), [&](int bottom) {
            return std::all_of(above.begin(), above.end(), [&](int b) { return x.leq(bottom, b); });
        });
        if (down)
            out.push_back({a, BeatKind::Down});
        else if (up)
            out.push_back({a, BeatKind::Up});
    }
    return out;
}

CoreResult core_with_labels(const FinitePoset& x)
{
    CoreResult r{x, std::vector<int>(x.size())};
    std::iota(r.kept.begin(), r.kept.end(), 0);
    for (;;) {
        const auto beats = beat_points(r.core);
        if (beats.empty())
            return r;
        const int drop = beats.front().element;
        std::vector<int> keep;
        for (int i = 0; i < static_cast<int>(r.core.size()); ++i)
            if (i != drop)
                keep.push_back(i);
        r.core = r.core.induced(keep);
        r.kept.erase(r.kept.begin() + drop);
    }
}

FinitePoset core(const FinitePoset& x) { return core_with_labels(x).core; }

Integer automorphism_count(const FinitePoset& x, std::size_t cap)
{
    const std::size_t n = x.size();
    if (n > cap)
        throw Error(Errc::SearchCapExceeded,
                    std::to_string(n) + " elements exceed the automorphism cap of " + std::to_string(cap));
    const auto lvl = levels(x);
    std::vector<std::tuple<int, int, int>> sig(n);
    for (std::size_t a = 0; a < n; ++a) {
        int below = 0;
        int above = 0;
        for (std::size_t b = 0; b < n; ++b) {
            below += x.less(static_cast<int>(b), static_cast<int>(a));
            above += x.less(static_cast<int>(a), static_cast<int>(b));
        }
        sig[a] = {below, above, lvl[a]};
    }
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    Integer count = 0;
    auto place = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            ++count;
            return;
        }
        const int a = static_cast<int>(i);
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || sig[c] != sig[i])
                continue;
            const int b = static_cast<int>(c);
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                const int pj = image[j];
                const int aj = static_cast<int>(j);
                ok = x.less(a, aj) == x.less(b, pj) && x.less(aj, a) == x.less(pj, b);
            }
            if (!ok)
                continue;
            used[c] = 1;
            image[i] = b;
            self(self, i + 1);
            used[c] = 0;
        }
    };
    place(place, 0);
    return count;
}

int height(const FinitePoset& x)
{
    if (x.size() == 0)
        return -1;
    const auto lvl = levels(x);
    return *std::max_element(lvl.begin(), lvl.end());
}

std::size_t width(const FinitePoset& x)
{
    // Dilworth: minimum chain cover = n - maximum matching in the comparability graph.
    const int n = static_cast<int>(x.size());
    std::vector<int> match_right(static_cast<std::size_t>(n), -1);
    std::size_t matching = 0;
    for (int a = 0; a < n; ++a) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        auto augment = [&](auto&& self, int u) -> bool {
            for (int v = 0; v < n; ++v) {
                if (!x.less(u, v) || seen[static_cast<std::size_t>(v)])
                    continue;
                seen[static_cast<std::size_t>(v)] = 1;
                const int owner = match_right[static_cast<std::size_t>(v)];
                if (owner < 0 || self(self, owner)) {
                    match_right[static_cast<std::size_t>(v)] = u;
                    return true;
                }
            }
            return false;
        };
        if (augment(augment, a))
            ++matching;
    }
    return x.size() - matching;
}

Integer poset_determinant(const FinitePoset& x)
{
    const int n = static_cast<int>(x.size());
    std::vector<std::vector<Integer>> m(x.size(), std::vector<Integer>(x.size(), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x.leq(i, j) ? 0 : 1;
    return abs(determinant(m));
}

bool is_linear_extension(const FinitePoset& x, const LinearExtension& e)
{
    if (e.order.size() != x.size())
        return false;
    std::vector<int> pos(x.size(), -1);
    for (std::size_t i = 0; i < e.order.size(); ++i) {
        const int v = e.order[i];
        if (v < 0 || static_cast<std::size_t>(v) >= x.size() || pos[static_cast<std::size_t>(v)] >= 0)
            return false;
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (const auto& [a, b] : x.relations())
        if (pos[static_cast<std::size_t>(a)] > pos[static_cast<std::size_t>(b)])
            return false;
    return true;
}

bool realizes(const FinitePoset& x, const std::vector<LinearExtension>& extensions)
{
    std::vector<std::vector<int>> pos;
    for (const auto& e : extensions) {
        if (!is_linear_extension(x, e))
            return false;
        std::vector<int> p(x.size());
        for (std::size_t i = 0; i < e.order.size(); ++i)
            p[static_cast<std::size_t>(e.order[i])] = static_cast<int>(i);
        pos.push_back(std::move(p));
    }
    const int n = static_cast<int>(x.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b)
                continue;
            const bool all = std::all_of(pos.begin(), pos.end(), [&](const std::vector<int>& p) {
                return p[static_cast<std::size_t>(a)] < p[static_cast<std::size_t>(b)];
            });
            if (all != x.less(a, b))
                return false;
        }
    return true;
}

FinitePoset delta_poset(int m, int q, int n)
{
    if (m < 1 || q < 1 || n < 0)
        throw Error(Errc::InvalidParameters, "delta poset needs m, q >= 1 and n >= 0");
    FinitePoset p = FinitePoset::antichain(static_cast<std::size_t>(m));
    const FinitePoset level = FinitePoset::antichain(static_cast<std::size_t>(q));
    for (int i = 0; i < n; ++i)
        p = nh_join(p, level);
    return p;
}

DimensionRealizer order_dimension_realizer(int m, int q, int n)
{
    DimensionRealizer r;
    r.poset = delta_poset(m, q, n);
    auto push_level = [&](int first, int count) {
        for (int i = 0; i < count; ++i) {
            r.e1.order.push_back(first + i);
            r.e2.order.push_back(first + count - 1 - i);
        }
    };
    push_level(0, m);
    for (int j = 1; j <= n; ++j)
        push_level(m + (j - 1) * q, q);

    const int size = static_cast<int>(r.poset.size());
    for (int a = 0; a < size && !r.incomparable; ++a)
        for (int b = a + 1; b < size && !r.incomparable; ++b)
            if (!r.poset.comparable(a, b))
                r.incomparable = std::pair{a, b};
    r.dimension = r.incomparable ? 2 : 1;
    r.verified = r.dimension == 1 ? realizes(r.poset, {r.e1}) : realizes(r.poset, {r.e1, r.e2});
    return r;
}

} // namespace riocomb
