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

#include "riocomb/fps.hpp"

#include <algorithm>

#include "riocomb/error.hpp"

namespace riocomb {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw Error(Errc::InvalidParameters, "power series truncation must be at least 1");
}

PowerSeries PowerSeries::zero(std::size_t trunc)
{
    return PowerSeries(std::vector<Rational>(std::max<std::size_t>(trunc, 1)));
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t trunc)
{
    auto s = zero(trunc);
    s.coeffs_[0] = c;
    return s;
}

PowerSeries PowerSeries::x(std::size_t trunc)
{
    auto s = zero(trunc);
    if (s.trunc() > 1)
        s.coeffs_[1] = 1;
    return s;
}

PowerSeries PowerSeries::polynomial(std::span<const Rational> coeffs, std::size_t trunc)
{
    auto s = zero(trunc);
    for (std::size_t k = 0; k < std::min(coeffs.size(), s.trunc()); ++k)
        s.coeffs_[k] = coeffs[k];
    return s;
}

PowerSeries PowerSeries::polynomial(std::initializer_list<Rational> coeffs, std::size_t trunc)
{
    return polynomial(std::span<const Rational>(coeffs.begin(), coeffs.size()), trunc);
}

bool PowerSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

PowerSeries PowerSeries::truncated(std::size_t n) const
{
    if (n > trunc())
        throw Error(Errc::TruncationExceeded,
                    "cannot extend a series of truncation " + std::to_string(trunc()) + " to " +
                        std::to_string(n));
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

PowerSeries PowerSeries::times_x() const
{
    std::vector<Rational> c;
    c.reserve(trunc() + 1);
    c.emplace_back(0);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::divided_by_x() const
{
    if (coeffs_[0] != 0)
        throw Error(Errc::InvalidParameters, "division by x needs a zero constant term");
    if (trunc() < 2)
        throw Error(Errc::TruncationExceeded, "division by x would leave no known coefficient");
    return PowerSeries(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

PowerSeries PowerSeries::inverse() const
{
    if (coeffs_[0] == 0)
        throw Error(Errc::ZeroConstantTerm, "series without constant term has no inverse");
    const std::size_t n = trunc();
    std::vector<Rational> b(n);
    const Rational inv0 = 1 / coeffs_[0];
    b[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i)
            if (coeffs_[i] != 0)
                acc += coeffs_[i] * b[k - i];
        b[k] = -acc * inv0;
    }
    return PowerSeries(std::move(b));
}

PowerSeries PowerSeries::pow(unsigned exponent) const
{
    PowerSeries result = constant(1, trunc());
    PowerSeries base = *this;
    while (exponent > 0) {
        if (exponent & 1U)
            result = result * base;
        exponent >>= 1U;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const
{
    if (inner.coeffs_[0] != 0)
        throw Error(Errc::NonzeroInnerConstant, "inner series of a composition must have order >= 1");
    const std::size_t n = std::min(trunc(), inner.trunc());
    const PowerSeries in = inner.truncated(n);
    // Horner: a_0 + in (a_1 + in (a_2 + ...)). Only terms with k < n matter,
    // since in^k has order >= k.
    PowerSeries acc = constant(coeffs_[n - 1], n);
    for (std::size_t k = n - 1; k-- > 0;) {
        acc = acc * in;
        acc.coeffs_[0] += coeffs_[k];
    }
    return acc;
}

PowerSeries PowerSeries::compositional_inverse() const
{
    if (coeffs_[0] != 0 || trunc() < 2 || coeffs_[1] == 0)
        throw Error(Errc::NotOrderOne, "compositional inverse needs a series of order exactly one");
    const std::size_t n = trunc();
    const Rational inv1 = 1 / coeffs_[1];
    std::vector<Rational> b(n);
    b[1] = inv1;
    // Degree by degree: [x^k] this(b) = a_1 b_k + (terms in b_1..b_{k-1}).
    for (std::size_t k = 2; k < n; ++k) {
        const PowerSeries partial = PowerSeries(std::vector<Rational>(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(k + 1)));
        const PowerSeries composed = truncated(k + 1).compose(partial);
        b[k] = -composed[k] * inv1;
    }
    return PowerSeries(std::move(b));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
{
    const std::size_t n = std::min(a.trunc(), b.trunc());
    std::vector<Rational> c(n);
    for (std::size_t k = 0; k < n; ++k)
        c[k] = a.coeffs_[k] + b.coeffs_[k];
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries PowerSeries::operator-() const
{
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = -coeffs_[k];
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    const std::size_t n = std::min(a.trunc(), b.trunc());
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (b.coeffs_[j] != 0)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.inverse(); }

PowerSeries operator*(const Rational& c, const PowerSeries& a)
{
    std::vector<Rational> out(a.coeffs_.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = c * a.coeffs_[k];
    return PowerSeries(std::move(out));
}

PowerSeries binomial_series(const Rational& r, std::size_t trunc)
{
    auto s = PowerSeries::zero(trunc);
    std::vector<Rational> c(s.trunc());
    c[0] = 1;
    for (std::size_t k = 1; k < c.size(); ++k)
        c[k] = c[k - 1] * (r - Rational(static_cast<long>(k) - 1)) / Rational(static_cast<long>(k));
    return PowerSeries(std::move(c));
}

} // namespace riocomb
