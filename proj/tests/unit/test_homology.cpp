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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "riocomb/families.hpp"
#include "riocomb/homology.hpp"
#include "riocomb/verify.hpp"
#include "test_util.hpp"

using namespace riocomb;
using testutil::Z;

TEST(Boundary, EdgeAndVertices)
{
    const auto edge = SimplicialComplex::simplex(1);
    const BoundaryMatrix d0 = boundary_matrix(edge, 0);
    EXPECT_EQ(d0.dense(), (std::vector<std::vector<int>>{{1, 1}}));
    const BoundaryMatrix d1 = boundary_matrix(edge, 1);
    EXPECT_EQ(d1.dense(), (std::vector<std::vector<int>>{{-1}, {1}}));
    EXPECT_EQ(d1.at(0, 0), -1);
    EXPECT_EQ(boundary_matrix(edge, 2).cols, 0U);
    EXPECT_ERRC(boundary_matrix(edge, 3), Errc::InvalidParameters);
}

TEST(Boundary, TriangleSigns)
{
    const BoundaryMatrix d = boundary_matrix(SimplicialComplex::simplex(2), 2);
    // Rows {0,1}, {0,2}, {1,2}.
    EXPECT_EQ(d.dense(), (std::vector<std::vector<int>>{{1}, {-1}, {1}}));
    EXPECT_EQ(exact_rank(d), 1U);
}

TEST(Boundary, OctahedronRanks)
{
    const auto oct = delta_complex(2, 2, 2);
    EXPECT_EQ(exact_rank(boundary_matrix(oct, 0)), 1U);
    EXPECT_EQ(exact_rank(boundary_matrix(oct, 1)), 5U);
    EXPECT_EQ(exact_rank(boundary_matrix(oct, 2)), 7U);
    for (int k = 1; k <= 3; ++k)
        EXPECT_TRUE(composes_to_zero(boundary_matrix(oct, k - 1), boundary_matrix(oct, k)));
}

TEST(Betti, Examples)
{
    EXPECT_EQ(reduced_betti(SimplicialComplex::simplex(3)).entries, Z({0, 0, 0, 0}));
    EXPECT_EQ(reduced_betti(delta_complex(2, 2, 2)).entries, Z({0, 0, 1}));
    EXPECT_EQ(reduced_betti(SimplicialComplex::discrete(4)).entries, Z({3}));
    EXPECT_EQ(reduced_betti(delta_complex(3, 3, 1)).entries, Z({0, 4}));
    EXPECT_EQ(reduced_betti(SimplicialComplex::simplex_boundary(4)).entries, Z({0, 0, 0, 1}));
    // Two hollow triangles sharing a vertex.
    const SimplicialComplex bouquet(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}});
    EXPECT_EQ(reduced_betti(bouquet).entries, Z({0, 2}));
    EXPECT_TRUE(reduced_betti(SimplicialComplex()).entries.empty());
}

TEST(Betti, CorpusAgreesWithDenseOracle)
{
    for (const auto& k : random_corpus(4242, 60)) {
        if (k.is_empty())
            continue;
        const BettiVector b = reduced_betti(k);
        EXPECT_EQ(b.entries, oracle::reduced_betti(k.facets()));
        EXPECT_EQ(euler_from_betti(b), Integer(euler_characteristic(k)));
        for (int d = 1; d <= k.dimension() + 1; ++d)
            EXPECT_TRUE(composes_to_zero(boundary_matrix(k, d - 1), boundary_matrix(k, d)));
    }
}

TEST(Betti, ConeShiftsHomology)
{
    for (const auto& k : random_corpus(99, 30)) {
        if (k.is_empty())
            continue;
        const auto base = reduced_betti(k).entries;
        for (int q = 1; q <= 3; ++q) {
            const auto cone = reduced_betti(q_cone(k, q)).entries;
            ASSERT_EQ(cone.size(), base.size() + 1);
            EXPECT_EQ(cone[0], 0);
            for (std::size_t i = 0; i < base.size(); ++i)
                EXPECT_EQ(cone[i + 1], (q - 1) * base[i]);
        }
    }
}
