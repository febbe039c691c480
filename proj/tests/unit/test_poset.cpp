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
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "riocomb/families.hpp"
#include "riocomb/homology.hpp"
#include "riocomb/poset.hpp"
#include "test_util.hpp"

using namespace riocomb;
using testutil::Z;

namespace {

oracle::Order order_of(const FinitePoset& x)
{
    oracle::Order lt(x.size(), std::vector<bool>(x.size(), false));
    for (const auto& [a, b] : x.relations())
        lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    return lt;
}

std::vector<FinitePoset> random_posets(unsigned seed, int count)
{
    std::mt19937 rng(seed);
    std::vector<FinitePoset> out;
    for (int i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(rng() % 7);
        std::bernoulli_distribution edge(0.3);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> rel;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (edge(rng))
                    rel.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
        out.push_back(FinitePoset::from_relations(static_cast<std::size_t>(n), rel));
    }
    return out;
}

oracle::Rational dense_det(const FinitePoset& x)
{
    std::vector<std::vector<oracle::Rational>> m(x.size(), std::vector<oracle::Rational>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            m[i][j] = x.leq(static_cast<int>(i), static_cast<int>(j)) ? 0 : 1;
    return oracle::det(m);
}

std::vector<Integer> trimmed_betti(const FinitePoset& x)
{
    auto b = reduced_betti(order_complex(x)).entries;
    while (!b.empty() && b.back() == 0)
        b.pop_back();
    return b;
}

} // namespace

TEST(Poset, Construction)
{
    const auto p = FinitePoset::from_relations(4, {{0, 1}, {1, 2}});
    EXPECT_TRUE(p.less(0, 2));
    EXPECT_FALSE(p.comparable(0, 3));
    EXPECT_EQ(p.relations(), (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(p.covers(), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
    EXPECT_EQ(FinitePoset::chain(3), FinitePoset::from_relations(3, {{0, 1}, {1, 2}}));
    EXPECT_ERRC(FinitePoset::from_relations(2, {{0, 1}, {1, 0}}), Errc::InvalidPoset);
    EXPECT_ERRC(FinitePoset::from_relations(2, {{0, 0}}), Errc::InvalidPoset);
    EXPECT_ERRC(FinitePoset::from_relations(2, {{0, 5}}), Errc::InvalidPoset);
    EXPECT_EQ(p.induced({2, 0}), FinitePoset::from_relations(2, {{1, 0}}));
}

TEST(Poset, JoinAndOrderComplex)
{
    const auto j = nh_join(FinitePoset::antichain(2), FinitePoset::antichain(3));
    EXPECT_EQ(j.size(), 5U);
    EXPECT_EQ(j.relations().size(), 6U);
    EXPECT_EQ(order_complex(FinitePoset::chain(3)), SimplicialComplex::simplex(2));
    EXPECT_EQ(order_complex(FinitePoset::antichain(3)), SimplicialComplex::discrete(3));
    EXPECT_EQ(order_complex(j), join(SimplicialComplex::discrete(2), SimplicialComplex::discrete(3)));
    EXPECT_EQ(order_complex(delta_poset(3, 2, 2)), delta_complex(3, 2, 2));
}

TEST(Poset, FacePoset)
{
    const auto p = face_poset(SimplicialComplex::simplex(1));
    EXPECT_EQ(p.size(), 3U);
    EXPECT_EQ(p.relations(), (std::vector<std::pair<int, int>>{{0, 2}, {1, 2}}));
    // Barycentric subdivision of the octahedron.
    EXPECT_EQ(f_vector(order_complex(face_poset(delta_complex(2, 2, 2)))).entries, Z({26, 72, 48}));
}

TEST(Poset, ChainCounts)
{
    EXPECT_EQ(chain_f_vector(FinitePoset::chain(3)).entries, Z({3, 3, 1}));
    for (const auto& x : random_posets(5, 40))
        EXPECT_EQ(chain_f_vector(x), f_vector(order_complex(x)));
}

TEST(Poset, BeatPointsAndCore)
{
    EXPECT_EQ(core(FinitePoset::chain(4)).size(), 1U);
    EXPECT_EQ(core(FinitePoset::antichain(3)), FinitePoset::antichain(3));
    EXPECT_TRUE(beat_points(delta_poset(2, 2, 2)).empty());
    const auto bp = beat_points(FinitePoset::from_relations(3, {{0, 1}, {1, 2}}));
    EXPECT_EQ(bp.front(), (BeatPoint{0, BeatKind::Up}));
    EXPECT_EQ(bp.back(), (BeatPoint{2, BeatKind::Down}));
    // Removing a beat point from a contractible poset eventually leaves a point.
    const auto cone = nh_join(delta_poset(2, 2, 1), FinitePoset::chain(1));
    EXPECT_EQ(core(cone).size(), 1U);
    const CoreResult r = core_with_labels(nh_join(FinitePoset::chain(1), delta_poset(2, 2, 1)));
    EXPECT_EQ(r.kept.size(), 1U);
    for (const auto& x : random_posets(11, 60)) {
        const FinitePoset c = core(x);
        EXPECT_TRUE(beat_points(c).empty());
        EXPECT_EQ(core(c), c);
        EXPECT_EQ(trimmed_betti(c), trimmed_betti(x));
    }
}

TEST(Poset, Invariants)
{
    EXPECT_EQ(height(FinitePoset()), -1);
    EXPECT_EQ(height(FinitePoset::chain(5)), 4);
    EXPECT_EQ(width(FinitePoset::antichain(5)), 5U);
    EXPECT_EQ(height(delta_poset(3, 2, 3)), 3);
    EXPECT_EQ(width(delta_poset(3, 2, 3)), 3U);
    EXPECT_EQ(automorphism_count(delta_poset(2, 2, 2)), 8);
    EXPECT_EQ(automorphism_count(delta_poset(3, 2, 1)), 12);
    EXPECT_EQ(poset_determinant(delta_poset(3, 3, 1)), 4);
    EXPECT_EQ(poset_determinant(FinitePoset::chain(3)), 0);
    EXPECT_ERRC(automorphism_count(FinitePoset::antichain(13)), Errc::SearchCapExceeded);
    EXPECT_EQ(automorphism_count(FinitePoset::antichain(7)), 5040);
}

TEST(Poset, InvariantsAgreeWithOracles)
{
    for (const auto& x : random_posets(2718, 80)) {
        const auto lt = order_of(x);
        EXPECT_EQ(automorphism_count(x), oracle::automorphisms(lt));
        EXPECT_EQ(width(x), oracle::width(lt));
        const auto d = dense_det(x);
        EXPECT_EQ(Rational(poset_determinant(x)), d < 0 ? -d : d);
    }
}

TEST(Poset, LinearExtensions)
{
    const auto p = FinitePoset::from_relations(3, {{0, 2}, {1, 2}});
    EXPECT_TRUE(is_linear_extension(p, {{0, 1, 2}}));
    EXPECT_FALSE(is_linear_extension(p, {{2, 0, 1}}));
    EXPECT_FALSE(is_linear_extension(p, {{0, 2}}));
    EXPECT_TRUE(realizes(p, {{{0, 1, 2}}, {{1, 0, 2}}}));
    EXPECT_FALSE(realizes(p, {{{0, 1, 2}}}));
}

TEST(Poset, DeltaRealizers)
{
    for (int m = 1; m <= 3; ++m)
        for (int q = 1; q <= 3; ++q)
            for (int n = 0; n <= 3; ++n) {
                const auto r = order_dimension_realizer(m, q, n);
                EXPECT_TRUE(r.verified);
                EXPECT_EQ(r.poset, delta_poset(m, q, n));
                EXPECT_TRUE(is_linear_extension(r.poset, r.e1));
                EXPECT_TRUE(is_linear_extension(r.poset, r.e2));
                const bool chain = m == 1 && (q == 1 || n == 0);
                EXPECT_EQ(r.dimension, chain ? 1 : 2) << m << q << n;
                EXPECT_EQ(r.incomparable.has_value(), !chain);
            }
}
