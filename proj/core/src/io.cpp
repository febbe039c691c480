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

#include "riocomb/io.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "riocomb/error.hpp"

namespace riocomb::io {

namespace {

[[noreturn]] void shape_error(const std::string& what) { throw Error(Errc::ParseError, what); }

const Json& member(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        shape_error(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::size_t size_value(const Json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        shape_error(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

} // namespace

Json parse_json(std::string_view text, std::string_view source)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::ostringstream msg;
        msg << source << ":" << line << ":" << column << ": malformed JSON";
        throw Error(Errc::ParseError, msg.str());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path);
}

Json to_json(const Integer& z)
{
    if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
        return z.convert_to<long long>();
    return to_string(z);
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const std::vector<Integer>& v)
{
    Json out = Json::array();
    for (const auto& z : v)
        out.push_back(to_json(z));
    return out;
}

Json to_json(const std::vector<Rational>& v)
{
    Json out = Json::array();
    for (const auto& r : v)
        out.push_back(to_json(r));
    return out;
}

Json labeled(const std::vector<Integer>& v, int first)
{
    Json out = Json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
        out[std::to_string(first + static_cast<int>(i))] = to_json(v[i]);
    return out;
}

Json to_json(const PowerSeries& s)
{
    return {{"trunc", s.trunc()}, {"coeffs", to_json(std::vector<Rational>(s.coeffs().begin(), s.coeffs().end()))}};
}

Json to_json(const RiordanPair& p)
{
    return {{"alpha", to_json(p.alpha())}, {"omega", to_json(p.omega())}, {"trunc", p.trunc()}};
}

Json to_json(const FiniteMatrix& m)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(to_json(m.row(i)));
    return out;
}

Json to_json(const SimplicialComplex& k) { return {{"vertices", k.vertex_count()}, {"facets", k.facets()}}; }

Json to_json(const FinitePoset& p) { return {{"size", p.size()}, {"less", p.covers()}}; }

Json to_json(const BettiVector& b) { return to_json(b.entries); }

Json to_json(const CheckedDiagonal& d)
{
    return {{"diagonal", to_json(d.diagonal)}, {"verified", d.verified}, {"agree", d.agree}};
}

Json to_json(const FamilyReport& r)
{
    Json out = {
        {"m", r.m},
        {"q", r.q},
        {"depth", r.depth},
        {"F", to_json(r.F)},
        {"F_enumerated_rows", r.f_enumerated},
        {"Fext", to_json(r.Fext)},
        {"B", to_json(r.B)},
        {"C", to_json(r.C)},
        {"Ndet", to_json(r.Ndet)},
        {"chi", to_json(r.chi.values)},
        {"verdicts", r.verdicts},
        {"informational", r.informational},
    };
    if (r.has_H) {
        out["H"] = to_json(r.H.matrix);
        out["H_enumerated_rows"] = r.H.enumerated;
    }
    return out;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    shape_error("expected a rational string or integer, got " + j.dump());
}

namespace {

Integer integer_from_json(const Json& j)
{
    const Rational r = rational_from_json(j);
    if (!is_integer(r))
        shape_error("expected an integer, got " + j.dump());
    return to_integer(r);
}

} // namespace

std::vector<Integer> integers_from_json(const Json& j, int first)
{
    std::vector<Integer> out;
    if (j.is_array()) {
        for (const auto& e : j)
            out.push_back(integer_from_json(e));
        return out;
    }
    if (!j.is_object())
        shape_error("expected an array or an index-labeled object");
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string key = std::to_string(first + static_cast<int>(i));
        if (!j.contains(key))
            throw Error(Errc::DimensionMismatch, "labeled vector is missing index " + key);
        out.push_back(integer_from_json(j.at(key)));
    }
    return out;
}

PowerSeries series_from_json(const Json& j)
{
    const Json& coeffs = j.is_array() ? j : member(j, "coeffs");
    if (!coeffs.is_array())
        shape_error("\"coeffs\" must be an array");
    std::vector<Rational> c;
    for (const auto& e : coeffs)
        c.push_back(rational_from_json(e));
    std::size_t trunc = c.size();
    if (j.is_object() && j.contains("trunc"))
        trunc = size_value(j.at("trunc"), "trunc");
    if (trunc == 0)
        shape_error("a series needs trunc >= 1");
    return PowerSeries::polynomial(std::span<const Rational>(c), trunc);
}

RiordanPair riordan_from_json(const Json& j)
{
    if (!j.contains("trunc"))
        return {series_from_json(member(j, "alpha")), series_from_json(member(j, "omega"))};
    const std::size_t t = size_value(j.at("trunc"), "trunc");
    if (t == 0)
        shape_error("trunc must be positive");
    // Plain coefficient lists are polynomials and may be padded; series with
    // an explicit truncation may not be extended past it.
    auto widen = [&](const char* key) {
        const Json& s = member(j, key);
        const PowerSeries p = series_from_json(s);
        if (s.is_object() && s.contains("trunc") && p.trunc() < t)
            throw Error(Errc::TruncationExceeded, std::string(key) + " is only known to order " +
                                                      std::to_string(p.trunc()));
        return PowerSeries::polynomial(p.coeffs().subspan(0, std::min(t, p.trunc())), t);
    };
    return {widen("alpha"), widen("omega")};
}

SimplicialComplex complex_from_json(const Json& j)
{
    const Json& facets = member(j, "facets");
    if (!facets.is_array())
        shape_error("\"facets\" must be an array");
    std::vector<Face> fs;
    for (const auto& f : facets) {
        if (!f.is_array())
            shape_error("each facet must be an array of vertices");
        Face face;
        for (const auto& v : f) {
            if (!v.is_number_integer())
                shape_error("vertices must be integers");
            face.push_back(v.get<int>());
        }
        fs.push_back(std::move(face));
    }
    std::size_t vertices = 0;
    if (j.contains("vertices")) {
        vertices = size_value(j.at("vertices"), "vertices");
    } else {
        for (const auto& f : fs)
            for (int v : f)
                vertices = std::max<std::size_t>(vertices, static_cast<std::size_t>(std::max(v, 0)) + 1);
    }
    return {vertices, std::move(fs)};
}

FinitePoset poset_from_json(const Json& j)
{
    const std::size_t n = size_value(member(j, "size"), "size");
    std::vector<std::pair<int, int>> rel;
    if (j.contains("less")) {
        for (const auto& p : j.at("less")) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
                shape_error("each relation must be a pair [i, j]");
            rel.emplace_back(p[0].get<int>(), p[1].get<int>());
        }
    }
    return FinitePoset::from_relations(n, rel);
}

void write_csv(std::ostream& os, const FiniteMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? "," : "") << to_string(m(i, j));
        os << '\n';
    }
}

void write_csv(std::ostream& os, const std::vector<std::vector<int>>& m)
{
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? "," : "") << row[j];
        os << '\n';
    }
}

void write_csv(std::ostream& os, const std::vector<Integer>& v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << '\n';
}

} // namespace riocomb::io
