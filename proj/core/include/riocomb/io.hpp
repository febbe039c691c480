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

#ifndef RIOCOMB_IO_HPP
#define RIOCOMB_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "riocomb/families.hpp"
#include "riocomb/fps.hpp"
#include "riocomb/homology.hpp"
#include "riocomb/poset.hpp"
#include "riocomb/rational.hpp"
#include "riocomb/riordan.hpp"
#include "riocomb/scomplex.hpp"

namespace riocomb::io {

using Json = nlohmann::json;

// Parses JSON text; syntax errors become Error(ParseError) naming the line
// and column.
Json parse_json(std::string_view text, std::string_view source = "<input>");
Json read_json_file(const std::string& path);

// Integers that fit in 64 bits are numbers, larger ones decimal strings.
Json to_json(const Integer& z);
Json to_json(const Rational& r);
Json to_json(const std::vector<Integer>& v);
Json to_json(const std::vector<Rational>& v);
// {"vector-name": {"<first>": x, "<first+1>": y, ...}} style labels.
Json labeled(const std::vector<Integer>& v, int first);

Json to_json(const PowerSeries& s);
Json to_json(const RiordanPair& p);
Json to_json(const FiniteMatrix& m);
Json to_json(const SimplicialComplex& k);
Json to_json(const FinitePoset& p);
Json to_json(const BettiVector& b);
Json to_json(const CheckedDiagonal& d);
Json to_json(const FamilyReport& r);

// The readers throw Error(ParseError) on shape errors and let the domain
// constructors report invalid content.
Rational rational_from_json(const Json& j);
std::vector<Integer> integers_from_json(const Json& j, int first);
PowerSeries series_from_json(const Json& j);
RiordanPair riordan_from_json(const Json& j);
SimplicialComplex complex_from_json(const Json& j);
FinitePoset poset_from_json(const Json& j);

// Rows of comma separated rational strings.
void write_csv(std::ostream& os, const FiniteMatrix& m);
void write_csv(std::ostream& os, const std::vector<std::vector<int>>& m);
void write_csv(std::ostream& os, const std::vector<Integer>& v);

} // namespace riocomb::io

#endif
