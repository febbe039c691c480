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
#include "riocomb/poset.hpp"
#include "test_util.hpp"

using namespace riocomb;
using testutil::Z;

namespace {

Integer factorial(int n)
{
    Integer r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

} // namespace

TEST(Families, DeltaComplexes)
{
    EXPECT_EQ(delta_complex(3, 2, 0), SimplicialComplex::discrete(3));
    EXPECT_EQ(delta_complex(1, 1, 3), SimplicialComplex::simplex(3));
    EXPECT_EQ(f_vector(delta_complex(2, 2, 2)).entries, Z({6, 12, 8}));
    EXPECT_ERRC(delta_complex(0, 2, 1), Errc::InvalidParameters);
    EXPECT_ERRC(delta_complex(2, 0, 1), Errc::InvalidParameters);
    EXPECT_ERRC(delta_complex(2, 2, -1), Errc::InvalidParameters);
}

TEST(Families, ClosedFormMatchesEnumeration)
{
    for (int m = 1; m <= 4; ++m)
        for (int q = 1; q <= 4; ++q)
            for (int n = 0; n <= 4; ++n) {
                const SimplicialComplex k = delta_complex(m, q, n);
                if (k.face_count() > 20000)
                    continue;
                const auto f = f_vector(k).entries;
                Integer total = 0;
                for (int j = 0; j <= n; ++j) {
                    EXPECT_EQ(closed_form_f(m, q, n, j), f[static_cast<std::size_t>(j)]);
                    total += f[static_cast<std::size_t>(j)];
                }
                EXPECT_EQ(closed_form_face_count(m, q, n), total);
                EXPECT_EQ(Integer(static_cast<long long>(k.face_count())), total);
            }
    EXPECT_EQ(closed_form_f(2, 3, 2, 0), 8);
    EXPECT_ERRC(closed_form_f(2, 3, 2, 3), Errc::InvalidParameters);
}

TEST(Families, MatrixRowsAreFVectors)
{
    for (int m = 1; m <= 3; ++m)
        for (int q = 1; q <= 3; ++q) {
            const FiniteMatrix f = matrix_F(m, q, 8).finite(5);
            const FiniteMatrix fe = matrix_F_ext(m, q, 8).finite(5);
            for (int n = 0; n <= 4; ++n) {
                const auto ef = extended_f_vector(delta_complex(m, q, n)).entries;
                for (std::size_t k = 0; k < 6; ++k) {
                    const Rational want = k + 1 < ef.size() ? Rational(ef[k + 1]) : Rational(0);
                    EXPECT_EQ(f(static_cast<std::size_t>(n), k), want);
                    const Rational want_ext = k < ef.size() ? Rational(ef[k]) : Rational(0);
                    EXPECT_EQ(fe(static_cast<std::size_t>(n + 1), k), want_ext);
                }
            }
            EXPECT_EQ(fe(0, 0), Rational(m, q));
        }
}

TEST(Families, HMatrix)
{
    const HMatrix h = matrix_H(3, 3, 4);
    EXPECT_EQ(h.matrix(0, 0), 1);
    EXPECT_EQ(h.matrix.row(1), testutil::Q({1, 2, 0, 0}));
    EXPECT_EQ(h.matrix.row(2), testutil::Q({1, 4, 4, 0}));
    const HMatrix h22 = matrix_H(2, 2, 5);
    for (std::size_t n = 1; n < 5; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            EXPECT_EQ(h22.matrix(n, k), Rational(oracle::choose(static_cast<int>(n), static_cast<int>(k))));
    const HMatrix h43 = matrix_H(4, 3, 4);
    EXPECT_EQ(h43.matrix(0, 0), Rational(3, 2));
    for (std::size_t n = 1; n < 4; ++n)
        EXPECT_EQ(h43.matrix.row(n), [&] {
            auto e = h_from_f(extended_f_vector(delta_complex(4, 3, static_cast<int>(n) - 1))).entries;
            std::vector<Rational> r(4, Rational(0));
            for (std::size_t i = 0; i < e.size(); ++i)
                r[i] = e[i];
            return r;
        }());
    EXPECT_ERRC(matrix_H(1, 2, 4), Errc::InvalidParameters);
    EXPECT_ERRC(matrix_H(2, 1, 4), Errc::InvalidParameters);
}

TEST(Families, Factorizations)
{
    for (int m = 2; m <= 4; ++m)
        for (int q = 2; q <= 4; ++q)
            for (const auto& [name, ok] : factorizations(m, q))
                EXPECT_TRUE(ok) << name << " m=" << m << " q=" << q;
    EXPECT_EQ(factorizations(3, 3).count("h_left_factorization_regular"), 1U);
    EXPECT_EQ(factorizations(3, 2).count("h_left_factorization_regular"), 0U);
}

TEST(Families, ChiSequence)
{
    const ChiSequence c = chi_sequence(2, 2, {6, 16, 50000, 12});
    EXPECT_EQ(c.values, Z({2, 0, 2, 0, 2, 0}));
    EXPECT_TRUE(c.agree);
    const ChiSequence d = chi_sequence(3, 4, {4, 16, 50000, 12});
    EXPECT_EQ(d.values, Z({3, -5, 19, -53}));
    EXPECT_EQ(d.alternating_sums, d.values);
    EXPECT_EQ(d.ftrm, d.values);
    for (int n = 0; n < 4; ++n)
        EXPECT_EQ(d.values[static_cast<std::size_t>(n)], Integer(euler_characteristic(delta_complex(3, 4, n))));
}

TEST(Families, MuIdentity)
{
    for (int m = 1; m <= 4; ++m)
        for (int q = 1; q <= 4; ++q)
            EXPECT_TRUE(mu_identity(m, q).holds()) << m << q;
}

TEST(Families, ShiftIdentities)
{
    bool literal_failed = false;
    for (int m = 1; m <= 3; ++m)
        for (int q = 1; q <= 3; ++q)
            for (int s = 1; s <= 3; ++s) {
                const ShiftIdentities r = shift_identities(m, q, s);
                EXPECT_TRUE(r.a_seq) << m << q << s;
                EXPECT_TRUE(r.g_seq) << m << q << s;
                literal_failed = literal_failed || !r.g_seq_literal;
            }
    EXPECT_TRUE(literal_failed);
    EXPECT_FALSE(shift_identities(2, 2, 1).g_seq_literal);
}

TEST(Families, Diagonals)
{
    const FamilyConfig cfg{4, 16, 50000, 12};
    for (int m = 1; m <= 3; ++m)
        for (int q = 1; q <= 3; ++q) {
            const CheckedDiagonal b = matrix_B(m, q, cfg);
            const CheckedDiagonal c = matrix_C(m, q, cfg);
            const CheckedDiagonal d = matrix_Ndet(m, q, cfg);
            EXPECT_TRUE(b.agree && c.agree && d.agree);
            Integer qp = 1;
            for (std::size_t n = 0; n < 4; ++n, qp *= q - 1) {
                if (q > 1 || n == 0)
                    EXPECT_EQ(b.diagonal[n], (m - 1) * qp);
                else
                    EXPECT_EQ(b.diagonal[n], 0);
                EXPECT_EQ(d.diagonal[n], (m - 1) * qp);
                Integer qf = factorial(m);
                for (std::size_t i = 0; i < n; ++i)
                    qf *= factorial(q);
                EXPECT_EQ(c.diagonal[n], qf);
            }
            EXPECT_TRUE(d.verified[3]);
            // Independent recomputation of the top entry.
            const auto betti = reduced_betti(delta_complex(m, q, 3)).entries;
            EXPECT_EQ(betti.back(), b.diagonal[3]);
            EXPECT_EQ(poset_determinant(delta_poset(m, q, 3)), d.diagonal[3]);
        }
    const CheckedDiagonal big = matrix_C(3, 3, {6, 16, 50000, 12});
    EXPECT_TRUE(big.verified[2]);
    EXPECT_FALSE(big.verified[5]);
}

TEST(Families, Reports)
{
    for (int m = 1; m <= 3; ++m)
        for (int q = 1; q <= 3; ++q) {
            const FamilyReport r = build_family_report(m, q, {5, 16, 20000, 12});
            EXPECT_TRUE(r.all_pass()) << m << q;
            EXPECT_EQ(r.has_H, m >= 2 && q >= 2);
            EXPECT_EQ(r.informational.count("shift_g_seq_literal"), 1U);
        }
}

TEST(Families, RowPolynomials)
{
    // Row n of F is m(qx+1)^n + q sum_{j<n} (qx+1)^j.
    for (int m = 1; m <= 4; ++m)
        for (int q = 1; q <= 4; ++q) {
            const FiniteMatrix f = matrix_F(m, q, 10).finite(7);
            for (int n = 0; n <= 7; ++n) {
                std::vector<Integer> want(8, 0);
                for (int k = 0; k <= n; ++k) {
                    want[static_cast<std::size_t>(k)] += m * oracle::choose(n, k) * oracle::power(q, k);
                    for (int j = k; j < n; ++j)
                        want[static_cast<std::size_t>(k)] += q * oracle::choose(j, k) * oracle::power(q, k);
                }
                for (std::size_t k = 0; k < 8; ++k)
                    EXPECT_EQ(f(static_cast<std::size_t>(n), k), Rational(want[k])) << m << q << n << k;
            }
        }
}
