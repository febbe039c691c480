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

#include "riocomb/linalg.hpp"

#include "riocomb/error.hpp"

namespace riocomb {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& a, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[r]);
        const Rational inv = 1 / a[r][c];
        for (auto& v : a[r])
            v *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            const Rational f = a[i][c];
            for (std::size_t k = c; k < a[i].size(); ++k)
                a[i][k] -= f * a[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(const FiniteMatrix& m)
{
    std::vector<std::vector<Rational>> a;
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(m.row(i));
    return rref(a, m.cols()).size();
}

std::optional<std::vector<Rational>> solve(const FiniteMatrix& m, std::span<const Rational> b)
{
    if (b.size() != m.rows())
        throw Error(Errc::DimensionMismatch, "right-hand side length differs from row count");
    std::vector<std::vector<Rational>> a;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        r.push_back(b[i]);
        a.push_back(std::move(r));
    }
    const auto pivots = rref(a, m.cols() + 1);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    std::vector<Rational> x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = a[r][m.cols()];
    return x;
}

Integer determinant(std::vector<std::vector<Integer>> m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
    if (n == 0)
        return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace riocomb
