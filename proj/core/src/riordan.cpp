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

#include "riocomb/riordan.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

#include "riocomb/error.hpp"

namespace riocomb {

FiniteMatrix::FiniteMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

FiniteMatrix FiniteMatrix::identity(std::size_t n)
{
    FiniteMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

FiniteMatrix FiniteMatrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
    std::size_t cols = 0;
    for (const auto& r : rows)
        cols = std::max(cols, r.size());
    FiniteMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = rows[i][j];
    return m;
}

std::vector<Rational> FiniteMatrix::row(std::size_t i) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Rational> FiniteMatrix::column(std::size_t j) const
{
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

std::vector<Rational> FiniteMatrix::apply(std::span<const Rational> v) const
{
    if (v.size() != cols_)
        throw Error(Errc::DimensionMismatch, "matrix-vector size mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0)
                out[i] += (*this)(i, j) * v[j];
    return out;
}

bool FiniteMatrix::is_lower_triangular() const
{
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != 0)
                return false;
    return true;
}

FiniteMatrix FiniteMatrix::leading(std::size_t n) const
{
    if (n > rows_ || n > cols_)
        throw Error(Errc::TruncationExceeded, "leading block larger than the matrix");
    FiniteMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = (*this)(i, j);
    return m;
}

FiniteMatrix operator*(const FiniteMatrix& a, const FiniteMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error(Errc::DimensionMismatch, "matrix product size mismatch");
    FiniteMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0)
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

struct RiordanPair::ColumnCache {
    std::mutex mu;
    std::optional<PowerSeries> ratio;
    std::vector<std::shared_ptr<const PowerSeries>> columns;
};

RiordanPair::RiordanPair(PowerSeries alpha, PowerSeries omega)
    : alpha_(std::move(alpha)), omega_(std::move(omega)), cache_(std::make_shared<ColumnCache>())
{
    if (alpha_[0] == 0)
        throw Error(Errc::InvalidParameters, "Riordan pair needs alpha(0) != 0");
    if (omega_[0] == 0)
        throw Error(Errc::InvalidParameters, "Riordan pair needs omega(0) != 0");
    const std::size_t n = std::min(alpha_.trunc(), omega_.trunc());
    alpha_ = alpha_.truncated(n);
    omega_ = omega_.truncated(n);
}

RiordanPair RiordanPair::identity(std::size_t trunc)
{
    return {PowerSeries::constant(1, trunc), PowerSeries::constant(1, trunc)};
}

RiordanPair RiordanPair::pascal(std::size_t trunc)
{
    return {PowerSeries::constant(1, trunc), PowerSeries::polynomial({1, -1}, trunc)};
}

PowerSeries RiordanPair::x_over_omega() const { return omega_.inverse().times_x(); }

const PowerSeries& RiordanPair::column(std::size_t j) const
{
    std::lock_guard lock(cache_->mu);
    auto& cols = cache_->columns;
    if (cols.empty()) {
        cache_->ratio = x_over_omega().truncated(trunc());
        cols.push_back(std::make_shared<const PowerSeries>(alpha_ / omega_));
    }
    while (cols.size() <= j)
        cols.push_back(std::make_shared<const PowerSeries>(*cols.back() * *cache_->ratio));
    return *cols[j];
}

Rational RiordanPair::entry(std::size_t i, std::size_t j) const
{
    if (i >= trunc() || j >= trunc())
        throw Error(Errc::TruncationExceeded, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                  ") outside truncation " + std::to_string(trunc()));
    if (j > i)
        return 0;
    return column(j)[i];
}

FiniteMatrix RiordanPair::finite(std::size_t n) const
{
    if (n >= trunc())
        throw Error(Errc::TruncationExceeded, "finite block of order " + std::to_string(n + 1) +
                                                  " needs truncation > " + std::to_string(n));
    FiniteMatrix m(n + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const PowerSeries& c = column(j);
        for (std::size_t i = j; i <= n; ++i)
            m(i, j) = c[i];
    }
    return m;
}

RiordanPair operator*(const RiordanPair& lhs, const RiordanPair& rhs)
{
    // T(a|w) T(k|t) = T(a k(x/w) | w t(x/w)).
    const PowerSeries u = lhs.x_over_omega();
    return {lhs.alpha_ * rhs.alpha_.compose(u), lhs.omega_ * rhs.omega_.compose(u)};
}

PowerSeries RiordanPair::a_sequence() const
{
    // x/A is the compositional inverse of x/omega.
    const PowerSeries v = x_over_omega().compositional_inverse();
    return v.divided_by_x().inverse();
}

RiordanPair RiordanPair::inverse() const
{
    const PowerSeries v = x_over_omega().compositional_inverse();
    const PowerSeries a = v.divided_by_x().inverse();
    return {alpha_.compose(v).inverse(), a};
}

PowerSeries RiordanPair::apply(const PowerSeries& zeta) const
{
    const std::size_t n = std::min(trunc(), zeta.trunc());
    const PowerSeries u = x_over_omega();
    return (alpha_ / omega_).truncated(n) * zeta.truncated(n).compose(u);
}

std::vector<std::vector<Rational>> RiordanPair::row_polynomials(std::size_t n) const
{
    if (n >= trunc())
        throw Error(Errc::TruncationExceeded, "row polynomial index beyond truncation");
    const Rational inv0 = 1 / omega_[0];
    std::vector<std::vector<Rational>> rows;
    rows.reserve(n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
        std::vector<Rational> p(r + 1);
        p[0] = alpha_[r];
        if (r > 0)
            for (std::size_t k = 0; k < r; ++k)
                p[k + 1] += rows[r - 1][k];
        for (std::size_t k = 1; k <= r; ++k) {
            if (omega_[k] == 0)
                continue;
            for (std::size_t t = 0; t < rows[r - k].size(); ++t)
                p[t] -= omega_[k] * rows[r - k][t];
        }
        for (auto& c : p)
            c *= inv0;
        rows.push_back(std::move(p));
    }
    return rows;
}

bool satisfies_a_sequence_rule(const FiniteMatrix& m, const PowerSeries& a)
{
    for (std::size_t i = 1; i < m.rows(); ++i)
        for (std::size_t j = 1; j <= i; ++j) {
            Rational sum = 0;
            for (std::size_t k = 0; k <= i - j; ++k) {
                if (k >= a.trunc())
                    return false;
                sum += a[k] * m(i - 1, j - 1 + k);
            }
            if (sum != m(i, j))
                return false;
        }
    return true;
}

} // namespace riocomb
