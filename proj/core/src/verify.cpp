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

#include "riocomb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "riocomb/error.hpp"
#include "riocomb/homology.hpp"
#include "riocomb/poset.hpp"

namespace riocomb {

namespace {

using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

// Counts checks and keeps the first failure.
class Tally {
public:
    void check(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok && first_failure_.empty())
            first_failure_ = what;
        failures_ += ok ? 0 : 1;
    }

    void fail(const std::string& what) { check(false, what); }

    Claim finish(std::string id, std::string statement, Json detail = Json::object()) const
    {
        Claim c{std::move(id), std::move(statement), failures_ == 0 ? ClaimStatus::Pass : ClaimStatus::Fail,
                std::move(detail)};
        c.detail["checks"] = checks_;
        c.detail["failures"] = failures_;
        if (!first_failure_.empty())
            c.detail["first_failure"] = first_failure_;
        return c;
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string first_failure_;
};

std::string tag(int m, int q, int n)
{
    std::ostringstream s;
    s << "m=" << m << " q=" << q << " n=" << n;
    return s.str();
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

FamilyConfig with_depth(const VerifyOptions& o, std::size_t depth)
{
    FamilyConfig c = o.family;
    c.depth = depth;
    c.trunc = std::max(c.trunc, depth + 2);
    return c;
}

Rational random_rational(std::mt19937& rng, bool nonzero)
{
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    int p = num(rng);
    while (nonzero && p == 0)
        p = num(rng);
    return Rational(p, den(rng));
}

PowerSeries random_series(std::mt19937& rng, std::size_t trunc)
{
    std::vector<Rational> c;
    for (std::size_t i = 0; i < trunc; ++i)
        c.push_back(random_rational(rng, i == 0));
    return PowerSeries(std::move(c));
}

} // namespace

std::string_view status_name(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::Pass:
        return "pass";
    case ClaimStatus::Fail:
        return "fail";
    case ClaimStatus::Skipped:
        return "skipped";
    }
    return "skipped";
}

bool VerifyReport::passed() const
{
    return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::Fail; });
}

nlohmann::json VerifyReport::to_json() const
{
    Json arr = Json::array();
    for (const auto& c : claims)
        arr.push_back({{"id", c.id}, {"paper_ref", c.statement}, {"status", status_name(c.status)}, {"detail", c.detail}});
    return {{"claims", arr}};
}

Suite parse_suite(std::string_view name)
{
    if (name == "all")
        return Suite::All;
    if (name == "families")
        return Suite::Families;
    if (name == "riordan")
        return Suite::Riordan;
    if (name == "poset")
        return Suite::Poset;
    if (name == "complex")
        return Suite::Complex;
    throw Error(Errc::InvalidParameters, "unknown suite '" + std::string(name) + "'");
}

std::vector<SimplicialComplex> random_corpus(std::uint32_t seed, std::size_t count)
{
    std::mt19937 rng(seed);
    std::vector<SimplicialComplex> out;
    while (out.size() < count) {
        const int v = std::uniform_int_distribution<int>(2, 8)(rng);
        const bool pure = out.size() % 2 == 0;
        const int dim = std::uniform_int_distribution<int>(0, std::min(v - 1, 3))(rng);
        const int gens = std::uniform_int_distribution<int>(1, 7)(rng);
        std::vector<Face> faces;
        for (int g = 0; g < gens; ++g) {
            const int size = pure ? dim + 1 : std::uniform_int_distribution<int>(1, std::min(v, 4))(rng);
            std::vector<Vertex> pool(static_cast<std::size_t>(v));
            for (int i = 0; i < v; ++i)
                pool[static_cast<std::size_t>(i)] = i;
            std::shuffle(pool.begin(), pool.end(), rng);
            Face f(pool.begin(), pool.begin() + size);
            std::sort(f.begin(), f.end());
            faces.push_back(std::move(f));
        }
        out.push_back(SimplicialComplex::generated_by(std::move(faces)));
    }
    return out;
}

Claim claim_f_vector_closed_form(const VerifyOptions&)
{
    const auto t0 = Clock::now();
    Tally t;
    std::size_t largest = 0;
    for (int m = 1; m <= 4; ++m)
        for (int q = 1; q <= 4; ++q)
            for (int n = 0; n <= 6; ++n) {
                const SimplicialComplex k = delta_complex(m, q, n);
                largest = std::max(largest, k.face_count());
                const FVector f = f_vector(k);
                t.check(f.entries.size() == static_cast<std::size_t>(n + 1), "dimension " + tag(m, q, n));
                for (int j = 0; j <= n && j < static_cast<int>(f.entries.size()); ++j)
                    t.check(f.entries[static_cast<std::size_t>(j)] == closed_form_f(m, q, n, j),
                            "f_" + std::to_string(j) + " " + tag(m, q, n));
            }
    const double secs = seconds_since(t0);
    t.check(secs < 30.0, "time budget of 30 s exceeded");
    return t.finish("f_vector_closed_form", "f_{n,k} = [q C(n,k+1) + m C(n,k)] q^k by face enumeration, 1<=m,q<=4, n<=6",
                    {{"seconds", secs}, {"largest_face_count", largest}});
}

Claim claim_printed_tables(const VerifyOptions&)
{
    Tally t;
    const std::vector<std::vector<long>> f11 = {{1}, {2, 1}, {3, 3, 1}, {4, 6, 4, 1}, {5, 10, 10, 5, 1}};
    const std::vector<std::vector<long>> f22 = {{2}, {4, 4}, {6, 12, 8}, {8, 24, 32, 16}, {10, 40, 80, 80, 32}};
    auto compare = [&](int m, int q, const std::vector<std::vector<long>>& table) {
        const FiniteMatrix f = matrix_F(m, q, 8).finite(4);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                const Rational want = j <= i ? Rational(table[i][j]) : Rational(0);
                t.check(f(i, j) == want, "F_{" + std::to_string(m) + "," + std::to_string(q) + "} entry (" +
                                             std::to_string(i) + "," + std::to_string(j) + ")");
            }
    };
    compare(1, 1, f11);
    compare(2, 2, f22);
    return t.finish("printed_tables", "5x5 leading blocks of F_{1,1} and F_{2,2} equal the printed tables");
}

Claim claim_h_matrix(const VerifyOptions& o)
{
    Tally t;
    const FamilyConfig c = with_depth(o, 7);
    for (int m = 2; m <= 4; ++m)
        for (int q = 2; q <= 4; ++q) {
            const HMatrix h = matrix_H(m, q, c.depth, c.cap_faces);
            const FiniteMatrix fext = matrix_F_ext(m - 1, q - 1, c.trunc).finite(c.depth - 1);
            t.check(h.matrix == fext, "H != F~ shifted " + tag(m, q, 0));
            for (std::size_t i = 1; i < c.depth; ++i) {
                const int n = static_cast<int>(i) - 1;
                t.check(h.enumerated[i], "row not enumerated " + tag(m, q, n));
                const HVector direct = h_from_f_direct(extended_f_vector(delta_complex(m, q, n)));
                for (std::size_t j = 0; j < direct.entries.size(); ++j)
                    t.check(h.matrix(i, j) == Rational(direct.entries[j]), "direct h " + tag(m, q, n));
            }
        }
    return t.finish("h_matrix_identity", "H_{m,q} = F~_{m-1,q-1} at depth 7, 2<=m,q<=4, rows recomputed directly");
}

Claim claim_worked_example(const VerifyOptions&)
{
    Tally t;
    const SimplicialComplex k = delta_complex(3, 3, 1);
    const ExtendedFVector ef = extended_f_vector(k);
    const HVector want{{1, 4, 4}};
    t.check(h_from_f_direct(ef) == want, "summation formula");
    t.check(h_from_f_riordan(ef) == want, "Riordan transform");
    const ExactFacing phi{{
        {{0, 3}, {}},
        {{0, 4}, {4}},
        {{0, 5}, {5}},
        {{1, 3}, {1}},
        {{1, 4}, {1, 4}},
        {{1, 5}, {1, 5}},
        {{2, 3}, {2}},
        {{2, 4}, {2, 4}},
        {{2, 5}, {2, 5}},
    }};
    try {
        t.check(facing_h_counts(k, phi) == want, "facing counts");
    } catch (const Error& e) {
        t.fail(e.what());
    }
    const auto found = find_exact_facing(k);
    t.check(found && facing_h_counts(k, *found) == want, "searched facing");
    return t.finish("worked_example_h", "h of the order complex of Delta_{3,3}^{(1)} is (1,4,4) three ways");
}

Claim claim_euler_characteristic(const VerifyOptions& o)
{
    Tally t;
    for (int m = 1; m <= 3; ++m)
        for (int q = 1; q <= 3; ++q) {
            const ChiSequence chi = chi_sequence(m, q, with_depth(o, 5));
            for (int n = 0; n <= 4; ++n) {
                const auto idx = static_cast<std::size_t>(n);
                const Integer want = 1 + (m - 1) * ipow(Integer(1 - q), static_cast<unsigned>(n));
                const SimplicialComplex k = delta_complex(m, q, n);
                t.check(Integer(euler_characteristic(k)) == want, "alternating sum " + tag(m, q, n));
                t.check(chi.ftrm[idx] == want, "FTRM " + tag(m, q, n));
                t.check(euler_from_betti(reduced_betti(k)) == want, "Betti " + tag(m, q, n));
            }
        }
    return t.finish("euler_characteristic", "chi = 1 + (m-1)(1-q)^n three ways, m,q<=3, n<=4");
}

Claim claim_mu_identity(const VerifyOptions& o)
{
    Tally t;
    for (int m = 1; m <= 4; ++m)
        for (int q = 1; q <= 4; ++q) {
            const MuIdentity mu = mu_identity(m, q, with_depth(o, 7));
            t.check(mu.weighted, "weighted sum " + tag(m, q, 6));
            t.check(mu.integer_form, "integer form " + tag(m, q, 6));
            t.check(mu.ftrm, "FTRM form " + tag(m, q, 6));
        }
    return t.finish("mu_identity", "sum_k (-1)^k f_{nk}/m^{k+1} = 1 and sum_k (-1)^k m^{n-k} f_{nk} = m^{n+1}, m,q<=4, n<=6");
}

Claim claim_betti_diagonal(const VerifyOptions&)
{
    const auto t0 = Clock::now();
    Tally t;
    std::size_t widest = 0;
    auto expect = [&](int m, int q, int n, const Integer& top) {
        const SimplicialComplex k = delta_complex(m, q, n);
        for (int d = 0; d <= n + 1; ++d)
            widest = std::max(widest, boundary_matrix(k, d).cols);
        const BettiVector b = reduced_betti(k);
        t.check(b.entries.size() == static_cast<std::size_t>(n + 1), "length " + tag(m, q, n));
        for (std::size_t i = 0; i < b.entries.size(); ++i)
            t.check(b.entries[i] == (static_cast<int>(i) == n ? top : Integer(0)),
                    "b_" + std::to_string(i) + " " + tag(m, q, n));
    };
    for (int m = 2; m <= 3; ++m)
        for (int q = 2; q <= 3; ++q)
            for (int n = 0; n <= 4; ++n)
                expect(m, q, n, (m - 1) * ipow(Integer(q - 1), static_cast<unsigned>(n)));
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n)
            expect(m, 1, n, 0);
    const double secs = seconds_since(t0);
    t.check(secs < 60.0, "time budget of 60 s exceeded");
    return t.finish("betti_diagonal", "reduced Betti numbers vanish except b_n = (m-1)(q-1)^n; q=1 gives zero for n>=1",
                    {{"seconds", secs}, {"widest_boundary_matrix", widest}});
}

Claim claim_riordan_group_laws(const VerifyOptions& o)
{
    Tally t;
    std::mt19937 rng(o.seed);
    const std::size_t trunc = 12;
    const std::size_t last = trunc - 1;
    for (int trial = 0; trial < 50; ++trial) {
        const std::string at = "pair " + std::to_string(trial);
        const RiordanPair a(random_series(rng, trunc), random_series(rng, trunc));
        const RiordanPair b(random_series(rng, trunc), random_series(rng, trunc));
        const FiniteMatrix fa = a.finite(last);
        t.check(fa * b.finite(last) == (a * b).finite(last), "product " + at);
        const RiordanPair inv = a.inverse();
        const FiniteMatrix id = FiniteMatrix::identity(trunc);
        t.check(fa * inv.finite(last) == id && inv.finite(last) * fa == id, "inverse " + at);
        t.check(satisfies_a_sequence_rule(fa, a.a_sequence()), "A-sequence " + at);
        const PowerSeries zeta = random_series(rng, trunc);
        const auto image = a.apply(zeta);
        const auto direct = fa.apply(zeta.coeffs());
        t.check(std::equal(direct.begin(), direct.end(), image.coeffs().begin()), "FTRM " + at);
    }
    return t.finish("riordan_group_laws", "product, inverse, A-sequence and FTRM on 50 random pairs at truncation 12",
                    {{"seed", o.seed}});
}

Claim claim_dehn_sommerville(const VerifyOptions& o)
{
    Tally t;
    std::size_t palindromic = 0;
    auto probe = [&](const SimplicialComplex& k, const std::string& what, bool must_hold) {
        try {
            const DehnSommervilleCheck ds = ds_check(extended_f_vector(k));
            t.check(ds.eigenvector == ds.h_palindromic, "disagreement on " + what);
            palindromic += ds.h_palindromic ? 1 : 0;
            if (must_hold)
                t.check(ds.satisfied, "not satisfied on " + what);
        } catch (const std::logic_error& e) {
            t.fail(what + ": " + e.what());
        }
    };
    const auto corpus = random_corpus(o.seed, o.corpus_size);
    for (std::size_t i = 0; i < corpus.size(); ++i)
        probe(corpus[i], "corpus complex " + std::to_string(i), false);
    for (int n = 0; n <= 5; ++n)
        probe(delta_complex(2, 2, n), "cross-polytope boundary n=" + std::to_string(n), true);
    for (int d = 0; d <= 6; ++d) {
        const FiniteMatrix inv = ds_involution(d);
        for (const auto& col : ds_basis(d))
            t.check(inv.apply(col) == col, "basis column not fixed, d=" + std::to_string(d));
    }
    return t.finish("dehn_sommerville", "eigenvector test agrees with h-palindromy; ds_basis columns are fixed, d<=6",
                    {{"corpus", corpus.size()}, {"palindromic", palindromic}});
}

Claim claim_partitionability(const VerifyOptions& o)
{
    Tally t;
    std::vector<SimplicialComplex> pool = random_corpus(o.seed, o.corpus_size);
    for (std::size_t d = 0; d <= 3; ++d) {
        pool.push_back(SimplicialComplex::simplex(d));
        pool.push_back(SimplicialComplex::simplex_boundary(d + 1));
    }
    pool.push_back(delta_complex(2, 3, 2));
    pool.push_back(delta_complex(3, 2, 1));
    const SearchLimits limits{};
    std::size_t used = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const SimplicialComplex& k = pool[i];
        if (!k.is_pure() || k.is_empty() || k.face_count() + 1 > limits.max_faces || !is_vertex_decomposable(k))
            continue;
        ++used;
        const std::string what = "complex " + std::to_string(i);
        const auto phi = find_exact_facing(k, limits);
        if (!phi) {
            t.fail("no facing found for vertex-decomposable " + what);
            continue;
        }
        const HVector h = facing_h_counts(k, *phi);
        for (int q = 1; q <= 3; ++q) {
            const std::string at = what + " q=" + std::to_string(q);
            const SimplicialComplex cone = q_cone(k, q);
            t.check(is_vertex_decomposable(cone, limits), "cone not vertex-decomposable, " + at);
            try {
                const ExactFacing lifted = qcone_facing(k, *phi, q);
                validate_facing(cone, lifted);
                const HVector hc = facing_h_counts(cone, lifted);
                bool shift = hc.entries.size() == h.entries.size() + 1;
                for (std::size_t j = 0; shift && j < hc.entries.size(); ++j) {
                    const Integer hj = j < h.entries.size() ? h.entries[j] : Integer(0);
                    const Integer hprev = j > 0 ? h.entries[j - 1] : Integer(0);
                    shift = hc.entries[j] == hj + (q - 1) * hprev;
                }
                t.check(shift, "h shift rule, " + at);
            } catch (const Error& e) {
                t.fail(at + ": " + e.what());
            }
        }
    }
    t.check(used >= 10, "too few vertex-decomposable complexes in the corpus");
    return t.finish("partitionability_pipeline",
                    "q-cones of vertex-decomposable complexes stay vertex-decomposable; lifted facing gives h'_j = h_j + (q-1)h_{j-1}",
                    {{"complexes", used}});
}

Claim claim_poset_layer(const VerifyOptions& o)
{
    Tally t;
    for (int m = 1; m <= 3; ++m)
        for (int q = 1; q <= 3; ++q)
            for (int n = 0; n <= 2; ++n) {
                const Integer want = factorial(static_cast<unsigned>(m)) *
                                     ipow(factorial(static_cast<unsigned>(q)), static_cast<unsigned>(n));
                t.check(automorphism_count(delta_poset(m, q, n), o.family.cap_poset) == want, "Aut " + tag(m, q, n));
            }
    for (int m = 1; m <= 4; ++m)
        for (int q = 1; q <= 4; ++q)
            for (int n = 0; m + n * q <= 12; ++n) {
                const FinitePoset p = delta_poset(m, q, n);
                t.check(poset_determinant(p) == (m - 1) * ipow(Integer(q - 1), static_cast<unsigned>(n)),
                        "determinant " + tag(m, q, n));
                const DimensionRealizer r = order_dimension_realizer(m, q, n);
                t.check(r.verified, "realizer " + tag(m, q, n));
                const bool is_chain = m == 1 && (q == 1 || n == 0);
                t.check(r.dimension == (is_chain ? 1 : 2), "dimension " + tag(m, q, n));
                t.check(order_complex(p) == delta_complex(m, q, n), "order complex " + tag(m, q, n));
                const std::size_t core_size = core(p).size();
                if (m == 1 || (q == 1 && n >= 1))
                    t.check(core_size == 1, "core not a point " + tag(m, q, n));
                if (m >= 2 && q >= 2)
                    t.check(beat_points(p).empty(), "beat point found " + tag(m, q, n));
            }
    return t.finish("poset_layer",
                    "Aut = m!(q!)^n, det = (m-1)(q-1)^n, realizers, cores and order complexes of the delta posets");
}

Claim claim_factorizations(const VerifyOptions& o)
{
    Tally t;
    const FamilyConfig c = with_depth(o, 7);
    for (int m = 1; m <= 4; ++m)
        for (int q = 1; q <= 4; ++q) {
            if (m >= 2 && q >= 2)
                for (const auto& [name, ok] : factorizations(m, q, c))
                    t.check(ok, name + " " + tag(m, q, 0));
            for (int s = 0; s <= 3; ++s) {
                const ShiftIdentities sh = shift_identities(m, q, s, c);
                t.check(sh.a_seq, "A-sequence shift s=" + std::to_string(s) + " " + tag(m, q, 0));
                t.check(sh.g_seq, "g-sequence shift s=" + std::to_string(s) + " " + tag(m, q, 0));
            }
        }
    return t.finish("factorizations_and_shifts",
                    "D_L/D_R factorizations, Pascal factorizations of F~_{q,q}, shift identities s<=3, depth 7");
}

Claim claim_family_reports(const VerifyOptions& o)
{
    Tally t;
    Json failing = Json::array();
    for (int m = 1; m <= 4; ++m)
        for (int q = 1; q <= 4; ++q) {
            const FamilyReport r = build_family_report(m, q, o.family);
            for (const auto& [name, ok] : r.verdicts)
                if (!ok)
                    failing.push_back(name + " " + tag(m, q, 0));
            t.check(r.all_pass(), "report " + tag(m, q, 0));
        }
    return t.finish("family_reports", "every family verdict holds for 1<=m,q<=4 at the configured depth",
                    {{"failing", failing}, {"depth", o.family.depth}});
}

VerifyReport run_suite(Suite suite, const VerifyOptions& options)
{
    using Fn = Claim (*)(const VerifyOptions&);
    std::vector<std::pair<const char*, Fn>> fns;
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Families)
        fns.insert(fns.end(), {{"f_vector_closed_form", claim_f_vector_closed_form},
                               {"printed_tables", claim_printed_tables},
                               {"h_matrix_identity", claim_h_matrix},
                               {"worked_example_h", claim_worked_example},
                               {"euler_characteristic", claim_euler_characteristic},
                               {"mu_identity", claim_mu_identity},
                               {"betti_diagonal", claim_betti_diagonal},
                               {"factorizations_and_shifts", claim_factorizations},
                               {"family_reports", claim_family_reports}});
    if (all || suite == Suite::Riordan)
        fns.emplace_back("riordan_group_laws", claim_riordan_group_laws);
    if (all || suite == Suite::Complex)
        fns.insert(fns.end(), {{"dehn_sommerville", claim_dehn_sommerville},
                               {"partitionability_pipeline", claim_partitionability}});
    if (all || suite == Suite::Poset)
        fns.emplace_back("poset_layer", claim_poset_layer);

    VerifyReport report;
    for (const auto& [id, fn] : fns) {
        try {
            report.claims.push_back(fn(options));
        } catch (const std::exception& e) {
            report.claims.push_back({id, "raised an exception", ClaimStatus::Fail, {{"error", e.what()}}});
        }
    }
    return report;
}

} // namespace riocomb
