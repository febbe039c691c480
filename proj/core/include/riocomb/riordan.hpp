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

#ifndef RIOCOMB_RIORDAN_HPP
#define RIOCOMB_RIORDAN_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "riocomb/fps.hpp"
#include "riocomb/rational.hpp"

namespace riocomb {

/// Dense rational matrix. Riordan truncations are square and lower
/// triangular, but the type is general so that plain linear algebra
/// (involutions, spans, products) can reuse it.
class FiniteMatrix {
public:
    FiniteMatrix() = default;
    FiniteMatrix(std::size_t rows, std::size_t cols);

    static FiniteMatrix identity(std::size_t n);
    static FiniteMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const;
    std::vector<Rational> column(std::size_t j) const;

    std::vector<Rational> apply(std::span<const Rational> v) const;
    bool is_lower_triangular() const;
    // The leading (n x n) block.
    FiniteMatrix leading(std::size_t n) const;

    friend FiniteMatrix operator*(const FiniteMatrix& a, const FiniteMatrix& b);
    friend bool operator==(const FiniteMatrix& a, const FiniteMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// The Riordan matrix T(alpha | omega): column j has generating function
/// x^j alpha / omega^{j+1}. Entries are known for row indices below trunc().
///
/// Column series are computed lazily and cached; copies share the cache.
/// Concurrent readers are safe.
class RiordanPair {
public:
    // alpha(0) and omega(0) must be nonzero; trunc is the smaller truncation.
    RiordanPair(PowerSeries alpha, PowerSeries omega);

    static RiordanPair identity(std::size_t trunc);
    static RiordanPair pascal(std::size_t trunc);

    const PowerSeries& alpha() const noexcept { return alpha_; }
    const PowerSeries& omega() const noexcept { return omega_; }
    std::size_t trunc() const noexcept { return alpha_.trunc(); }

    Rational entry(std::size_t i, std::size_t j) const;
    // Leading principal (n+1) x (n+1) block; n < trunc().
    FiniteMatrix finite(std::size_t n) const;

    RiordanPair inverse() const;
    PowerSeries a_sequence() const;

    // The action on a column vector with generating function zeta:
    // (alpha / omega) zeta(x / omega).
    PowerSeries apply(const PowerSeries& zeta) const;

    // Row generating functions P_0 .. P_n, produced by the recurrence
    // omega_0 P_n = alpha_n + x P_{n-1} - sum_{k>=1} omega_k P_{n-k}
    // (independent of column extraction).
    std::vector<std::vector<Rational>> row_polynomials(std::size_t n) const;

    friend RiordanPair operator*(const RiordanPair& lhs, const RiordanPair& rhs);

private:
    struct ColumnCache;

    // x / omega, known to one degree more than omega itself.
    PowerSeries x_over_omega() const;
    const PowerSeries& column(std::size_t j) const;

    PowerSeries alpha_;
    PowerSeries omega_;
    std::shared_ptr<ColumnCache> cache_;
};

// d_{ij} = sum_k a_k d_{i-1, j-1+k} for all 1 <= j <= i < rows.
bool satisfies_a_sequence_rule(const FiniteMatrix& m, const PowerSeries& a);

} // namespace riocomb

#endif
