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

#ifndef RIOCOMB_FPS_HPP
#define RIOCOMB_FPS_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "riocomb/rational.hpp"

namespace riocomb {

/// Truncated formal power series with exact rational coefficients.
///
/// A series of truncation N knows its coefficients of x^0 .. x^{N-1} and
/// nothing beyond. Binary operations return the minimum truncation of
/// their operands; nothing is ever zero-padded past what is known.
class PowerSeries {
public:
    // Requires coeffs.size() >= 1.
    explicit PowerSeries(std::vector<Rational> coeffs);

    static PowerSeries zero(std::size_t trunc);
    static PowerSeries constant(const Rational& c, std::size_t trunc);
    static PowerSeries x(std::size_t trunc);

    // Exact polynomial, truncated (or zero-extended) to `trunc` terms.
    static PowerSeries polynomial(std::span<const Rational> coeffs, std::size_t trunc);
    static PowerSeries polynomial(std::initializer_list<Rational> coeffs, std::size_t trunc);

    std::size_t trunc() const noexcept { return coeffs_.size(); }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;

    // Keep the first n coefficients; n must not exceed trunc().
    PowerSeries truncated(std::size_t n) const;

    // Multiplication by x shifts known coefficients up: trunc grows by one.
    PowerSeries times_x() const;
    // Division by x for a series with zero constant term: trunc shrinks by one.
    PowerSeries divided_by_x() const;

    PowerSeries inverse() const;
    PowerSeries pow(unsigned exponent) const;

    // this(inner(x)); inner must have a zero constant term.
    PowerSeries compose(const PowerSeries& inner) const;

    // The series b with this(b(x)) = x. Requires order exactly one.
    PowerSeries compositional_inverse() const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& c, const PowerSeries& a);
    PowerSeries operator-() const;

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

private:
    std::vector<Rational> coeffs_;
};

/// (1 + x)^r for rational r, via C(r, k) = r (r-1) ... (r-k+1) / k!.
PowerSeries binomial_series(const Rational& r, std::size_t trunc);

} // namespace riocomb

#endif
