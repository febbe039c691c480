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

#include "riocomb/families.hpp"

#include <algorithm>

#include "riocomb/error.hpp"
#include "riocomb/homology.hpp"
#include "riocomb/poset.hpp"

namespace riocomb {

namespace {

void require_positive(int m, int q)
{
    if (m < 1 || q < 1)
        throw Error(Errc::InvalidParameters,
                    "need m, q >= 1, got m=" + std::to_string(m) + " q=" + std::to_string(q));
}

void require_h_range(int m, int q)
{
    if (m < 2 || q < 2)
        throw Error(Errc::InvalidParameters,
                    "need m, q >= 2, got m=" + std::to_string(m) + " q=" + std::to_string(q));
}

void require_config(const FamilyConfig& c)
{
    if (c.depth == 0)
        throw Error(Errc::InvalidParameters, "depth must be positive");
    if (c.trunc < c.depth)
        throw Error(Errc::InvalidParameters, "truncation " + std::to_string(c.trunc) + " below depth " +
                                                 std::to_string(c.depth));
}

Rational r(long v) { return Rational(v); }

PowerSeries poly(std::initializer_list<Rational> c, std::size_t trunc) { return PowerSeries::polynomial(c, trunc); }

bool within_cap(int m, int q, int n, std::size_t cap)
{
    return closed_form_face_count(m, q, n) <= Integer(static_cast<unsigned long>(cap));
}

std::vector<Integer> closed_form_row(int m, int q, int n)
{
    std::vector<Integer> row;
    for (int k = 0; k <= n; ++k)
        row.push_back(closed_form_f(m, q, n, k));
    return row;
}

// Integer table of F restricted to rows 0..depth-1; entries above the diagonal are zero.
std::vector<std::vector<Integer>> f_table(int m, int q, const FamilyConfig& c)
{
    const FiniteMatrix fm = matrix_F(m, q, c.trunc).finite(c.depth - 1);
    std::vector<std::vector<Integer>> t(c.depth, std::vector<Integer>(c.depth, 0));
    for (std::size_t i = 0; i < c.depth; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            t[i][j] = to_integer(fm(i, j));
    return t;
}

} // namespace

SimplicialComplex delta_complex(int m, int q, int n)
{
    require_positive(m, q);
    if (n < 0)
        throw Error(Errc::InvalidParameters, "need n >= 0");
    SimplicialComplex k = SimplicialComplex::discrete(static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i)
        k = q_cone(k, q);
    return k;
}

RiordanPair matrix_F(int m, int q, std::size_t trunc)
{
    require_positive(m, q);
    const PowerSeries num = poly({r(m), r(q - m)}, trunc);
    const PowerSeries den = poly({r(q), r(-q)}, trunc);
    return {num / den, poly({Rational(1, q), Rational(-1, q)}, trunc)};
}

Integer closed_form_f(int m, int q, int n, int k)
{
    if (k < 0 || k > n)
        throw Error(Errc::InvalidParameters, "need 0 <= k <= n");
    return (q * binomial(n, k + 1) + m * binomial(n, k)) * ipow(Integer(q), static_cast<unsigned>(k));
}

Integer closed_form_face_count(int m, int q, int n)
{
    Integer total = 0;
    for (int k = 0; k <= n; ++k)
        total += closed_form_f(m, q, n, k);
    return total;
}

RiordanPair matrix_F_ext(int m, int q, std::size_t trunc)
{
    require_positive(m, q);
    const Rational q2 = Rational(q) * q;
    return {poly({Rational(m) / q2, Rational(q - m) / q2}, trunc), poly({Rational(1, q), Rational(-1, q)}, trunc)};
}

HMatrix matrix_H(int m, int q, std::size_t depth, std::size_t cap_faces)
{
    require_h_range(m, q);
    HMatrix h;
    h.matrix = FiniteMatrix(depth, depth);
    h.enumerated.assign(depth, false);
    if (depth == 0)
        return h;
    h.matrix(0, 0) = Rational(m - 1, q - 1);
    for (std::size_t i = 1; i < depth; ++i) {
        const int n = static_cast<int>(i) - 1;
        ExtendedFVector ef;
        if (within_cap(m, q, n, cap_faces)) {
            ef = extended_f_vector(delta_complex(m, q, n));
            h.enumerated[i] = true;
        } else {
            ef = extend(FVector{closed_form_row(m, q, n)});
        }
        const HVector hv = h_from_f(ef);
        for (std::size_t j = 0; j < hv.entries.size(); ++j)
            h.matrix(i, j) = Rational(hv.entries[j]);
    }
    return h;
}

RiordanPair d_left(int m, int q, std::size_t trunc)
{
    require_h_range(m, q);
    const Rational k = Rational(q, q - 1);
    const PowerSeries ratio = poly({r(m - 1), r(q - m)}, trunc) / poly({r(m), r(q - 1 - m)}, trunc);
    const PowerSeries omega = poly({Rational(q, q - 1), Rational(-1, q - 1)}, trunc);
    return {k * (ratio * omega), omega};
}

RiordanPair d_right(int m, int q, std::size_t trunc)
{
    require_h_range(m, q);
    const Rational k = Rational(q, q - 1);
    const PowerSeries num = poly({r(q * (m - 1)), r(q - 1)}, trunc);
    const PowerSeries den = poly({r((q - 1) * m), r(q - 1)}, trunc);
    return {k * (num / den), PowerSeries::constant(k, trunc)};
}

std::map<std::string, bool> factorizations(int m, int q, const FamilyConfig& config)
{
    require_h_range(m, q);
    require_config(config);
    const std::size_t n = config.depth - 1;
    const std::size_t t = config.trunc;
    const FiniteMatrix h = matrix_H(m, q, config.depth, config.cap_faces).matrix;
    const FiniteMatrix fext = matrix_F_ext(m, q, t).finite(n);

    std::map<std::string, bool> out;
    out["h_left_factorization"] = d_left(m, q, t).finite(n) * fext == h;
    out["h_right_factorization"] = fext * d_right(m, q, t).finite(n) == h;
    if (m == q) {
        const Rational k = Rational(q, q - 1);
        const RiordanPair left(PowerSeries::constant(k, t), poly({Rational(q, q - 1), Rational(-1, q - 1)}, t));
        const RiordanPair right(PowerSeries::constant(k, t), PowerSeries::constant(k, t));
        out["h_left_factorization_regular"] = left.finite(n) * fext == h;
        out["h_right_factorization_regular"] = fext * right.finite(n) == h;
    }
    const FiniteMatrix fqq = matrix_F_ext(q, q, t).finite(n);
    const FiniteMatrix pascal = RiordanPair::pascal(t).finite(n);
    const RiordanPair lq(PowerSeries::constant(Rational(1, q), t), poly({Rational(1, q), Rational(q - 1, q)}, t));
    const RiordanPair rq(PowerSeries::constant(Rational(1, q), t), PowerSeries::constant(Rational(1, q), t));
    out["fext_qq_left_pascal"] = lq.finite(n) * pascal == fqq;
    out["fext_qq_right_pascal"] = pascal * rq.finite(n) == fqq;
    return out;
}

ChiSequence chi_sequence(int m, int q, const FamilyConfig& config)
{
    require_positive(m, q);
    require_config(config);
    const auto f = f_table(m, q, config);
    const PowerSeries image =
        matrix_F(m, q, config.trunc).apply(PowerSeries::polynomial({1, 1}, config.trunc).inverse());

    ChiSequence c;
    c.agree = true;
    for (std::size_t n = 0; n < config.depth; ++n) {
        c.values.push_back(1 + (m - 1) * ipow(Integer(1 - q), static_cast<unsigned>(n)));
        Integer alt = 0;
        for (std::size_t k = 0; k <= n; ++k)
            alt += k % 2 == 0 ? f[n][k] : Integer(-f[n][k]);
        c.alternating_sums.push_back(alt);
        c.ftrm.push_back(to_integer(image[n]));
        c.agree = c.agree && alt == c.values.back() && c.ftrm.back() == c.values.back();
    }
    return c;
}

MuIdentity mu_identity(int m, int q, const FamilyConfig& config)
{
    require_positive(m, q);
    require_config(config);
    const auto f = f_table(m, q, config);
    MuIdentity mu;
    mu.weighted = true;
    mu.integer_form = true;
    for (std::size_t n = 0; n < config.depth; ++n) {
        Rational weighted = 0;
        Integer integral = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational w = Rational(f[n][k]) / Rational(ipow(Integer(m), static_cast<unsigned>(k + 1)));
            weighted += k % 2 == 0 ? w : Rational(-w);
            const Integer t = ipow(Integer(m), static_cast<unsigned>(n - k)) * f[n][k];
            integral += k % 2 == 0 ? t : Integer(-t);
        }
        mu.weighted = mu.weighted && weighted == 1;
        mu.integer_form = mu.integer_form && integral == ipow(Integer(m), static_cast<unsigned>(n + 1));
    }
    const PowerSeries image =
        matrix_F(m, q, config.trunc).apply(PowerSeries::polynomial({r(m), 1}, config.trunc).inverse());
    const PowerSeries geometric = PowerSeries::polynomial({1, -1}, config.trunc).inverse();
    mu.ftrm = image.truncated(config.depth) == geometric.truncated(config.depth);
    return mu;
}

ShiftIdentities shift_identities(int m, int q, int s, const FamilyConfig& config)
{
    require_positive(m, q);
    require_config(config);
    if (s < 0)
        throw Error(Errc::InvalidParameters, "need s >= 0");
    const auto f = f_table(m, q, config);
    const int depth = static_cast<int>(config.depth);
    auto at = [&](int n, int k) -> Integer {
        if (n < 0 || k < 0 || k > n || n >= depth)
            return 0;
        return f[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    };
    const Integer qi(q);
    ShiftIdentities out{true, true, true};
    for (int n = s; n < depth; ++n)
        for (int k = s; k <= n; ++k) {
            Integer a = 0;
            Integer g = 0;
            Integer lit = 0;
            for (int j = 0; j <= n - k; ++j) {
                if (j <= s)
                    a += ipow(qi, static_cast<unsigned>(s - j)) * binomial(s, j) * at(n - s, k - s + j);
                g += ipow(qi, static_cast<unsigned>(s)) * binomial(s + j - 1, j) * at(n - s - j, k - s);
                lit += ipow(qi, static_cast<unsigned>(k)) * binomial(s, j) * at(n - s - j, k - s);
            }
            const Integer& target = f[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
            out.a_seq = out.a_seq && a == target;
            out.g_seq = out.g_seq && g == target;
            out.g_seq_literal = out.g_seq_literal && lit == target;
        }
    return out;
}

CheckedDiagonal matrix_B(int m, int q, const FamilyConfig& config)
{
    require_positive(m, q);
    require_config(config);
    CheckedDiagonal b;
    for (std::size_t n = 0; n < config.depth; ++n) {
        const Integer expected = q == 1 ? Integer(n == 0 ? m - 1 : 0)
                                        : (m - 1) * ipow(Integer(q - 1), static_cast<unsigned>(n));
        b.diagonal.push_back(expected);
        const int ni = static_cast<int>(n);
        if (!within_cap(m, q, ni, config.cap_faces)) {
            b.verified.push_back(false);
            continue;
        }
        const BettiVector betti = reduced_betti(delta_complex(m, q, ni));
        bool ok = betti.entries.size() == n + 1;
        for (std::size_t k = 0; ok && k <= n; ++k)
            ok = betti.entries[k] == (k == n ? expected : Integer(0));
        b.verified.push_back(true);
        b.agree = b.agree && ok;
    }
    return b;
}

CheckedDiagonal matrix_C(int m, int q, const FamilyConfig& config)
{
    require_positive(m, q);
    require_config(config);
    CheckedDiagonal c;
    for (std::size_t n = 0; n < config.depth; ++n) {
        const Integer expected =
            factorial(static_cast<unsigned>(m)) * ipow(factorial(static_cast<unsigned>(q)), static_cast<unsigned>(n));
        c.diagonal.push_back(expected);
        const std::size_t size = static_cast<std::size_t>(m) + n * static_cast<std::size_t>(q);
        if (size > config.cap_poset) {
            c.verified.push_back(false);
            continue;
        }
        const Integer count = automorphism_count(delta_poset(m, q, static_cast<int>(n)), config.cap_poset);
        c.verified.push_back(true);
        c.agree = c.agree && count == expected;
    }
    return c;
}

CheckedDiagonal matrix_Ndet(int m, int q, const FamilyConfig& config)
{
    require_positive(m, q);
    require_config(config);
    CheckedDiagonal d;
    for (std::size_t n = 0; n < config.depth; ++n) {
        const Integer expected = (m - 1) * ipow(Integer(q - 1), static_cast<unsigned>(n));
        d.diagonal.push_back(expected);
        d.verified.push_back(true);
        d.agree = d.agree && poset_determinant(delta_poset(m, q, static_cast<int>(n))) == expected;
    }
    return d;
}

bool FamilyReport::all_pass() const
{
    return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.second; });
}

FamilyReport build_family_report(int m, int q, const FamilyConfig& config)
{
    require_positive(m, q);
    require_config(config);
    FamilyReport rep;
    rep.m = m;
    rep.q = q;
    rep.depth = config.depth;
    const std::size_t last = config.depth - 1;
    const RiordanPair f = matrix_F(m, q, config.trunc);
    rep.F = f.finite(last);
    rep.Fext = matrix_F_ext(m, q, config.trunc).finite(last);

    bool brute = true;
    bool closed = true;
    bool first_column = true;
    bool a_rule = true;
    bool rows_poly = true;
    bool fext_rows = true;
    const PowerSeries qx1 = PowerSeries::polynomial({1, r(q)}, config.trunc);
    for (std::size_t n = 0; n < config.depth; ++n) {
        const int ni = static_cast<int>(n);
        const auto cf = closed_form_row(m, q, ni);
        for (std::size_t k = 0; k <= n; ++k)
            closed = closed && rep.F(n, k) == Rational(cf[k]);
        if (within_cap(m, q, ni, config.cap_faces)) {
            const FVector fv = f_vector(delta_complex(m, q, ni));
            brute = brute && fv.entries == cf;
            rep.f_enumerated.push_back(true);
        } else {
            rep.f_enumerated.push_back(false);
        }
        if (n >= 1) {
            first_column = first_column && rep.F(n, 0) == rep.F(n - 1, 0) + q;
            for (std::size_t k = 1; k <= n; ++k)
                a_rule = a_rule && rep.F(n, k) == rep.F(n - 1, k) + q * rep.F(n - 1, k - 1);
            const auto ef = extend(FVector{closed_form_row(m, q, ni - 1)});
            for (std::size_t k = 0; k <= n; ++k)
                fext_rows = fext_rows && rep.Fext(n, k) == Rational(ef.entries[k]);
        }
        PowerSeries p = Rational(m) * qx1.pow(static_cast<unsigned>(n));
        for (std::size_t j = 0; j < n; ++j)
            p = p + Rational(q) * qx1.pow(static_cast<unsigned>(j));
        for (std::size_t k = 0; k < config.depth; ++k)
            rows_poly = rows_poly && p[k] == rep.F(n, k);
    }
    rep.verdicts["f_enumeration"] = brute;
    rep.verdicts["f_closed_form"] = closed;
    rep.verdicts["f_first_column_rule"] = first_column;
    rep.verdicts["f_a_sequence_rule"] = a_rule;
    rep.verdicts["f_a_sequence"] = f.a_sequence().truncated(config.depth) ==
                                   PowerSeries::polynomial({r(q), 1}, config.depth);
    rep.verdicts["f_row_polynomials"] = rows_poly;
    rep.verdicts["fext_rows"] = fext_rows;

    if (m >= 2 && q >= 2) {
        rep.has_H = true;
        rep.H = matrix_H(m, q, config.depth, config.cap_faces);
        rep.verdicts["h_equals_fext_shifted"] = rep.H.matrix == matrix_F_ext(m - 1, q - 1, config.trunc).finite(last);
        for (const auto& [name, ok] : factorizations(m, q, config))
            rep.verdicts[name] = ok;
    }

    rep.chi = chi_sequence(m, q, config);
    rep.verdicts["chi_three_way"] = rep.chi.agree;
    rep.verdicts["mu_identity"] = mu_identity(m, q, config).holds();

    bool a_seq = true;
    bool g_seq = true;
    bool literal = true;
    const int smax = std::min<int>(3, static_cast<int>(last));
    for (int s = 0; s <= smax; ++s) {
        const auto sh = shift_identities(m, q, s, config);
        a_seq = a_seq && sh.a_seq;
        g_seq = g_seq && sh.g_seq;
        literal = literal && sh.g_seq_literal;
    }
    rep.verdicts["shift_a_seq"] = a_seq;
    rep.verdicts["shift_g_seq"] = g_seq;
    rep.informational["shift_g_seq_literal"] = literal;

    rep.B = matrix_B(m, q, config);
    rep.C = matrix_C(m, q, config);
    rep.Ndet = matrix_Ndet(m, q, config);
    rep.verdicts["b_betti"] = rep.B.agree;
    rep.verdicts["c_automorphisms"] = rep.C.agree;
    rep.verdicts["ndet_determinant"] = rep.Ndet.agree;
    rep.verdicts["b_equals_ndet"] = rep.B.diagonal == rep.Ndet.diagonal;
    return rep;
}

} // namespace riocomb
