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

#ifndef RIOCOMB_RATIONAL_HPP
#define RIOCOMB_RATIONAL_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace riocomb {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q"; throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

// Throws Error(InvalidParameters) when r has a denominator other than 1.
Integer to_integer(const Rational& r);

// C(n, k) for integer n (possibly negative, upper-index convention), 0 when k < 0.
Integer binomial(long n, long k);
Integer factorial(unsigned n);
Integer ipow(const Integer& base, unsigned exponent);

std::vector<Rational> to_rationals(const std::vector<Integer>& v);

} // namespace riocomb

#endif
