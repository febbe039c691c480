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
#include "riocomb/riordan.hpp"
#include "test_util.hpp"

using namespace riocomb;
using testutil::R;
using testutil::S;

namespace {

std::vector<Rational> coeffs(const PowerSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

std::vector<std::vector<Rational>> rows_of(const FiniteMatrix& m)
{
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(m.row(i));
    return out;
}

PowerSeries random_unit(std::mt19937& rng, std::size_t n)
{
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> c;
    for (std::size_t i = 0; i < n; ++i) {
        int p = num(rng);
        while (i == 0 && p == 0)
            p = num(rng);
        c.push_back(Rational(p, den(rng)));
    }
    return PowerSeries(std::move(c));
}

} // namespace

TEST(Riordan, Entries)
{
    const RiordanPair pascal = RiordanPair::pascal(8);
    EXPECT_EQ(pascal.entry(4, 2), 6);
    EXPECT_EQ(pascal.entry(0, 1), 0);
    EXPECT_EQ(matrix_F(2, 2, 8).entry(2, 1), 12);
    EXPECT_ERRC(pascal.entry(8, 0), Errc::TruncationExceeded);
}

TEST(Riordan, FiniteBlocks)
{
    EXPECT_EQ(RiordanPair::pascal(6).finite(2), FiniteMatrix::from_rows({{1, 0, 0}, {1, 1, 0}, {1, 2, 1}}));
    EXPECT_EQ(RiordanPair::identity(6).finite(2), FiniteMatrix::identity(3));
    const FiniteMatrix f22 = FiniteMatrix::from_rows(
        {{2, 0, 0, 0, 0}, {4, 4, 0, 0, 0}, {6, 12, 8, 0, 0}, {8, 24, 32, 16, 0}, {10, 40, 80, 80, 32}});
    EXPECT_EQ(matrix_F(2, 2, 6).finite(4), f22);
    EXPECT_ERRC(matrix_F(2, 2, 6).finite(6), Errc::TruncationExceeded);
}

TEST(Riordan, MatchesDirectColumnExpansion)
{
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        const RiordanPair p(random_unit(rng, 9), random_unit(rng, 9));
        EXPECT_EQ(rows_of(p.finite(8)), oracle::riordan_table(coeffs(p.alpha()), coeffs(p.omega()), 9));
    }
}

TEST(Riordan, Products)
{
    const RiordanPair f = matrix_F(3, 2, 10);
    EXPECT_EQ((f * RiordanPair::identity(10)).finite(9), f.finite(9));
    const FiniteMatrix pp = (RiordanPair::pascal(8) * RiordanPair::pascal(8)).finite(7);
    for (int n = 0; n < 8; ++n)
        for (int k = 0; k <= n; ++k)
            EXPECT_EQ(pp(static_cast<std::size_t>(n), static_cast<std::size_t>(k)),
                      Rational(oracle::choose(n, k) * oracle::power(2, n - k)));
    // T((m+(q-m)x)/(q(1-x)) | 1) T(1 | 1-x) T(1 | 1/q) = F_{m,q}
    for (int m = 1; m <= 4; ++m)
        for (int q = 1; q <= 4; ++q) {
            const RiordanPair a(S({m, q - m}, 10) / S({q, -q}, 10), S({1}, 10));
            const RiordanPair b(S({1}, 10), S({1, -1}, 10));
            const RiordanPair c(S({1}, 10), S({R(1, q)}, 10));
            EXPECT_EQ((a * b * c).finite(9), matrix_F(m, q, 10).finite(9)) << m << "," << q;
        }
}

TEST(Riordan, Inverses)
{
    EXPECT_EQ(RiordanPair::identity(5).inverse().finite(4), FiniteMatrix::identity(5));
    const RiordanPair pascal = RiordanPair::pascal(6);
    EXPECT_EQ(pascal.finite(5) * pascal.inverse().finite(5), FiniteMatrix::identity(6));
    for (int m = 1; m <= 4; ++m)
        for (int q = 1; q <= 4; ++q) {
            const RiordanPair inv = matrix_F(m, q, 10).inverse();
            const RiordanPair want(S({q}, 10) / S({m, 1}, 10), S({q, 1}, 10));
            EXPECT_EQ(inv.finite(9), want.finite(9)) << m << "," << q;
        }
}

TEST(Riordan, ActionOnColumns)
{
    const PowerSeries ones = S({1, -1}, 4).inverse();
    EXPECT_EQ(RiordanPair::pascal(4).apply(ones), S({1, 2, 4, 8}, 4));
    EXPECT_TRUE(matrix_F(3, 2, 6).apply(PowerSeries::zero(6)).is_zero());
    for (int m = 1; m <= 3; ++m)
        for (int q = 1; q <= 3; ++q) {
            const PowerSeries chi = matrix_F(m, q, 10).apply(S({1, 1}, 10).inverse());
            const PowerSeries want = S({m, q - m}, 10) / (S({1, -1}, 10) * S({1, q - 1}, 10));
            EXPECT_EQ(chi, want);
        }
}

TEST(Riordan, ASequences)
{
    EXPECT_EQ(RiordanPair::pascal(6).a_sequence(), S({1, 1}, 6));
    EXPECT_EQ(RiordanPair::identity(6).a_sequence(), S({1}, 6));
    for (int m = 1; m <= 4; ++m)
        for (int q = 1; q <= 4; ++q)
            EXPECT_EQ(matrix_F(m, q, 8).a_sequence(), S({q, 1}, 8));
    EXPECT_TRUE(satisfies_a_sequence_rule(RiordanPair::pascal(6).finite(5), S({1, 1}, 6)));
    EXPECT_FALSE(satisfies_a_sequence_rule(RiordanPair::pascal(6).finite(5), S({1, 2}, 6)));
}

TEST(Riordan, RowPolynomials)
{
    const auto pascal_rows = RiordanPair::pascal(7).row_polynomials(6);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            EXPECT_EQ(pascal_rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)],
                      Rational(oracle::choose(n, k)));
    const auto id_rows = RiordanPair::identity(5).row_polynomials(4);
    for (std::size_t n = 0; n < 5; ++n)
        for (std::size_t k = 0; k < id_rows[n].size(); ++k)
            EXPECT_EQ(id_rows[n][k], k == n ? 1 : 0);
    const auto f11 = matrix_F(1, 1, 8).row_polynomials(6);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            EXPECT_EQ(f11[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)],
                      Rational(oracle::choose(n + 1, k + 1)));
}

TEST(Riordan, RandomGroupLaws)
{
    std::mt19937 rng(99);
    for (int t = 0; t < 25; ++t) {
        const RiordanPair a(random_unit(rng, 10), random_unit(rng, 10));
        const RiordanPair b(random_unit(rng, 10), random_unit(rng, 10));
        const auto fa = rows_of(a.finite(9));
        EXPECT_EQ(rows_of((a * b).finite(9)), oracle::matmul(fa, rows_of(b.finite(9))));
        EXPECT_EQ((a * a.inverse()).finite(9), FiniteMatrix::identity(10));
        EXPECT_TRUE(satisfies_a_sequence_rule(a.finite(9), a.a_sequence()));
        const FiniteMatrix m = a.finite(9);
        Rational diag = a.alpha()[0] / a.omega()[0];
        for (std::size_t k = 0; k < 10; ++k, diag /= a.omega()[0])
            EXPECT_EQ(m(k, k), diag);
        const auto rows = a.row_polynomials(9);
        for (std::size_t i = 0; i < 10; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                EXPECT_EQ(rows[i][j], m(i, j));
    }
}

TEST(Riordan, RejectsDegeneratePairs)
{
    EXPECT_ERRC(RiordanPair(S({0, 1}, 4), S({1}, 4)), Errc::InvalidParameters);
    EXPECT_ERRC(RiordanPair(S({1}, 4), S({0, 1}, 4)), Errc::InvalidParameters);
}

TEST(FiniteMatrix, Basics)
{
    const FiniteMatrix a = FiniteMatrix::from_rows({{1, 2}, {3, 4}});
    EXPECT_EQ(a.apply(testutil::Q({1, 1})), testutil::Q({3, 7}));
    EXPECT_FALSE(a.is_lower_triangular());
    EXPECT_EQ(a.leading(1), FiniteMatrix::from_rows({{1}}));
    EXPECT_ERRC(a.apply(testutil::Q({1})), Errc::DimensionMismatch);
}
