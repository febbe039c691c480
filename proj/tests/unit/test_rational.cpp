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

#include "riocomb/rational.hpp"
#include "test_util.hpp"

using namespace riocomb;
using testutil::R;

TEST(Rational, ParsesAndPrintsNormalForm)
{
    EXPECT_EQ(parse_rational("6/4"), R(3, 2));
    EXPECT_EQ(parse_rational(" -3 "), R(-3));
    EXPECT_EQ(parse_rational("+5/10"), R(1, 2));
    EXPECT_EQ(to_string(R(3, 2)), "3/2");
    EXPECT_EQ(to_string(R(-4, 2)), "-2");
    EXPECT_EQ(to_string(R(0)), "0");
}

TEST(Rational, RejectsMalformedText)
{
    for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "--1", "1/"})
        EXPECT_ERRC(parse_rational(bad), Errc::ParseError);
}

TEST(Rational, LargeValuesStayExact)
{
    const Rational big = parse_rational("123456789012345678901234567890/7");
    EXPECT_EQ(to_string(big * 7), "123456789012345678901234567890");
    EXPECT_EQ(to_string(factorial(25)), "15511210043330985984000000");
}

TEST(Rational, BinomialConventions)
{
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, 6), 0);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(-1, 0), 1);
    EXPECT_EQ(binomial(-2, 3), -4);
    EXPECT_EQ(ipow(Integer(3), 4), 81);
}

TEST(Rational, IntegerConversion)
{
    EXPECT_TRUE(is_integer(R(4, 2)));
    EXPECT_FALSE(is_integer(R(1, 2)));
    EXPECT_EQ(to_integer(R(-6, 3)), -2);
    EXPECT_ERRC(to_integer(R(1, 3)), Errc::InvalidParameters);
}
