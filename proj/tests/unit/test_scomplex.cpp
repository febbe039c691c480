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

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "riocomb/families.hpp"
#include "riocomb/linalg.hpp"
#include "riocomb/scomplex.hpp"
#include "riocomb/verify.hpp"
#include "test_util.hpp"

using namespace riocomb;
using testutil::R;
using testutil::Z;

namespace {

const SimplicialComplex octahedron = delta_complex(2, 2, 2);
const SimplicialComplex square = delta_complex(2, 2, 1);

ExtendedFVector EF(std::initializer_list<long> c) { return {Z(c)}; }
HVector H(std::initializer_list<long> c) { return {Z(c)}; }

} // namespace

TEST(Complex, ConstructionValidates)
{
    EXPECT_ERRC(SimplicialComplex(3, {{0, 1}, {0, 1, 2}}), Errc::InvalidComplex);
    EXPECT_ERRC(SimplicialComplex(3, {{1, 0}}), Errc::InvalidComplex);
    EXPECT_ERRC(SimplicialComplex(3, {{0, 1}}), Errc::InvalidComplex);
    EXPECT_ERRC(SimplicialComplex(2, {{0, 2}}), Errc::InvalidComplex);
    EXPECT_ERRC(SimplicialComplex(2, {{0, 1}, {0, 1}}), Errc::InvalidComplex);
    EXPECT_ERRC(SimplicialComplex(2, {{}}), Errc::InvalidComplex);
    const SimplicialComplex k = SimplicialComplex::generated_by({{7, 3}, {3}, {9, 3, 7}, {}});
    EXPECT_EQ(k, SimplicialComplex(3, {{0, 1, 2}}));
}

TEST(Complex, EnumerateFaces)
{
    EXPECT_EQ(SimplicialComplex::simplex(2).face_count(), 7U);
    const SimplicialComplex path(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(enumerate_faces(path), (std::vector<Face>{{0}, {1}, {2}, {0, 1}, {1, 2}}));
    EXPECT_EQ(octahedron.face_count(), 26U);
    EXPECT_TRUE(octahedron.contains({0, 2, 4}));
    EXPECT_FALSE(octahedron.contains({0, 1}));
    EXPECT_TRUE(octahedron.contains({}));
}

TEST(Complex, FVectors)
{
    EXPECT_EQ(f_vector(SimplicialComplex::discrete(1)).entries, Z({1}));
    EXPECT_EQ(f_vector(SimplicialComplex::simplex(2)).entries, Z({3, 3, 1}));
    EXPECT_EQ(f_vector(octahedron).entries, Z({6, 12, 8}));
    EXPECT_EQ(extended_f_vector(octahedron).entries, Z({1, 6, 12, 8}));
    EXPECT_EQ(extended_f_vector(SimplicialComplex()).entries, Z({1}));
}

TEST(Complex, HVectors)
{
    EXPECT_EQ(h_from_f(EF({1, 3, 3, 1})), H({1, 0, 0, 0}));
    EXPECT_EQ(h_from_f(EF({1, 4, 4})), H({1, 2, 1}));
    EXPECT_EQ(h_from_f(EF({1, 6, 9})), H({1, 4, 4}));
    EXPECT_ERRC(h_from_f(EF({2, 3})), Errc::DimensionMismatch);
}

TEST(Complex, GAndGamma)
{
    EXPECT_EQ(g_from_h(H({1, 0})).entries, Z({1, -1, 0}));
    EXPECT_EQ(g_from_h(H({1, 2, 1})).entries, Z({1, 1, -1, -1}));
    EXPECT_EQ(g_from_h(H({1, 3, 3, 1})).entries, Z({1, 2, 0, -2, -1}));

    const GammaSeries a = gamma_from_h(H({1, 2, 1}));
    EXPECT_TRUE(a.is_vector);
    EXPECT_EQ(a.vector_length, 2U);
    EXPECT_EQ(a.entries[0], 1);
    EXPECT_EQ(a.entries[1], 0);
    const GammaSeries b = gamma_from_h(H({1, 0}));
    EXPECT_FALSE(b.is_vector);
    EXPECT_EQ(b.entries[0], 1);
    EXPECT_EQ(b.entries[1], -1);
    const GammaSeries c = gamma_from_h(H({1, 3, 3, 1}));
    EXPECT_TRUE(c.is_vector);
    EXPECT_EQ(c.entries, testutil::Q({1, 0, 0, 0}));
    EXPECT_EQ(gamma_from_h(H({1, 5, 5, 1})).entries, testutil::Q({1, 2, 0, 0}));
    EXPECT_EQ(gamma_from_h(H({1, 3, 3, 1}), 7).entries.size(), 7U);
}

TEST(Complex, DehnSommerville)
{
    EXPECT_TRUE(ds_check(EF({1, 4, 4})).satisfied);
    EXPECT_FALSE(ds_check(EF({1, 3, 3, 1})).satisfied);
    const auto oct = ds_check(EF({1, 6, 12, 8}));
    EXPECT_TRUE(oct.satisfied);
    EXPECT_EQ(oct.h, H({1, 3, 3, 1}));
    for (const auto& r : oct.eigen_residual)
        EXPECT_EQ(r, 0);
}

TEST(Complex, DehnSommervilleBasis)
{
    EXPECT_EQ(ds_basis(0).size(), 1U);
    for (int d = 0; d <= 6; ++d) {
        const FiniteMatrix inv = ds_involution(d);
        EXPECT_EQ(inv * inv, FiniteMatrix::identity(static_cast<std::size_t>(d + 2)));
        for (const auto& col : ds_basis(d))
            EXPECT_EQ(inv.apply(col), col) << "d=" << d;
    }
    // The reversed octahedron vector (f_2, f_1, f_0, f_{-1}) lies in the span.
    const auto cols = ds_basis(2);
    FiniteMatrix m(4, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < 4; ++i)
            m(i, j) = cols[j][i];
    EXPECT_TRUE(solve(m, testutil::Q({8, 12, 6, 1})).has_value());
    EXPECT_FALSE(solve(m, testutil::Q({1, 3, 3, 1})).has_value());
    EXPECT_ERRC(ds_basis(-1), Errc::InvalidParameters);
}

TEST(Complex, JoinsAndCones)
{
    const auto pt = SimplicialComplex::discrete(1);
    EXPECT_EQ(f_vector(join(pt, pt)).entries, Z({2, 1}));
    EXPECT_EQ(f_vector(join(SimplicialComplex::simplex(1), pt)).entries, Z({3, 3, 1}));
    EXPECT_EQ(f_vector(join(SimplicialComplex::discrete(2), SimplicialComplex::discrete(2))).entries, Z({4, 4}));
    EXPECT_EQ(q_cone(pt, 1), SimplicialComplex::simplex(1));
    EXPECT_EQ(f_vector(q_cone(SimplicialComplex::discrete(3), 1)).entries, Z({4, 3}));
    EXPECT_EQ(f_vector(q_cone(square, 2)).entries, Z({6, 12, 8}));
    EXPECT_EQ(join(SimplicialComplex(), square), square);
    EXPECT_ERRC(q_cone(pt, 0), Errc::InvalidQ);
}

TEST(Complex, EulerCharacteristic)
{
    EXPECT_EQ(euler_characteristic(SimplicialComplex::simplex(2)), 1);
    EXPECT_EQ(euler_characteristic(octahedron), 2);
    EXPECT_EQ(euler_characteristic(SimplicialComplex::discrete(3)), 3);
}

TEST(Complex, CorpusProperties)
{
    const auto corpus = random_corpus(2024, 80);
    for (const auto& k : corpus) {
        const auto facets = k.facets();
        const ExtendedFVector ef = extended_f_vector(k);
        // Closure agrees with the subset oracle.
        EXPECT_EQ(f_vector(k).entries, oracle::f_counts(facets));
        // Both h routes and the expanded polynomial identity agree.
        const HVector h = h_from_f_riordan(ef);
        EXPECT_EQ(h, h_from_f_direct(ef));
        EXPECT_EQ(h.entries, oracle::h_from_extended_f(ef.entries));
        EXPECT_EQ(f_from_h(h), ef);
        // Partial sums of g recover h.
        const GVector g = g_from_h(h);
        ASSERT_EQ(g.entries.size(), h.entries.size() + 1);
        Integer run = 0;
        for (std::size_t i = 0; i < h.entries.size(); ++i) {
            run += g.entries[i];
            EXPECT_EQ(run, h.entries[i]);
        }
        EXPECT_EQ(ds_check(ef).satisfied, is_palindromic(h));
        if (is_palindromic(h))
            EXPECT_TRUE(gamma_from_h(h, 12).is_vector);
        // Cone law: extended f of the q-cone is (1 + qx) times that of k.
        for (int q = 1; q <= 3; ++q) {
            const auto cone = extended_f_vector(q_cone(k, q)).entries;
            ASSERT_EQ(cone.size(), ef.entries.size() + 1);
            for (std::size_t i = 0; i < cone.size(); ++i) {
                const Integer a = i < ef.entries.size() ? ef.entries[i] : Integer(0);
                const Integer b = i > 0 ? Integer(q * ef.entries[i - 1]) : Integer(0);
                EXPECT_EQ(cone[i], a + b);
            }
        }
    }
    // Joins multiply f-polynomials.
    for (std::size_t i = 0; i + 1 < 20; ++i) {
        const auto a = extended_f_vector(corpus[i]).entries;
        const auto b = extended_f_vector(corpus[i + 1]).entries;
        std::vector<Integer> prod(a.size() + b.size() - 1, 0);
        for (std::size_t x = 0; x < a.size(); ++x)
            for (std::size_t y = 0; y < b.size(); ++y)
                prod[x + y] += a[x] * b[y];
        EXPECT_EQ(extended_f_vector(join(corpus[i], corpus[i + 1])).entries, prod);
    }
}

TEST(Complex, HighDimensionTransforms)
{
    for (std::size_t d = 0; d <= 10; ++d) {
        const auto ef = extended_f_vector(SimplicialComplex::simplex_boundary(d + 1));
        const HVector h = h_from_f(ef);
        EXPECT_EQ(h.entries, std::vector<Integer>(d + 2, 1));
        EXPECT_EQ(h.entries, oracle::h_from_extended_f(ef.entries));
    }
}
