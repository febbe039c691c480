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

#include "riocomb/error.hpp"
#include "riocomb/rational.hpp"

#include <cctype>

namespace riocomb {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::NonzeroInnerConstant: return "NonzeroInnerConstant";
    case Errc::NotOrderOne: return "NotOrderOne";
    case Errc::TruncationExceeded: return "TruncationExceeded";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::InvalidQ: return "InvalidQ";
    case Errc::NotPure: return "NotPure";
    case Errc::SearchCapExceeded: return "SearchCapExceeded";
    case Errc::InvalidFacing: return "InvalidFacing";
    case Errc::NotAFace: return "NotAFace";
    case Errc::InvalidComplex: return "InvalidComplex";
    case Errc::InvalidPoset: return "InvalidPoset";
    case Errc::ParseError: return "ParseError";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code)
{
}

std::string to_string(const Rational& r)
{
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(const Integer& z) { return z.str(); }

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw Error(Errc::ParseError, "not a rational: '" + std::string(whole) + "'");
    Integer z{std::string(s)};
    return negative ? Integer(-z) : z;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    const Integer num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text))
        throw Error(Errc::ParseError, "bad denominator in '" + std::string(text) + "'");
    const Integer den(std::string{den_text});
    if (den == 0)
        throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

Integer to_integer(const Rational& r)
{
    if (!is_integer(r))
        throw Error(Errc::InvalidParameters, "expected an integer, got " + to_string(r));
    return boost::multiprecision::numerator(r);
}

Integer binomial(long n, long k)
{
    if (k < 0)
        return 0;
    if (n >= 0 && k > n)
        return 0;
    // Falling factorial over k!; exact for negative n as well.
    Integer num = 1;
    Integer den = 1;
    for (long i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return num / den;
}

Integer factorial(unsigned n)
{
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

Integer ipow(const Integer& base, unsigned exponent)
{
    Integer r = 1;
    for (unsigned i = 0; i < exponent; ++i)
        r *= base;
    return r;
}

std::vector<Rational> to_rationals(const std::vector<Integer>& v)
{
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& z : v)
        out.emplace_back(z);
    return out;
}

} // namespace riocomb
