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

#ifndef RIOCOMB_FAMILIES_HPP
#define RIOCOMB_FAMILIES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "riocomb/fps.hpp"
#include "riocomb/rational.hpp"
#include "riocomb/riordan.hpp"
#include "riocomb/scomplex.hpp"

namespace riocomb {

/// Working sizes for the iterated q-cone families. Rows 0..depth-1 are
/// produced; brute-force checks run only below the caps, formula values are
/// always emitted.
struct FamilyConfig {
    std::size_t depth = 8;
    std::size_t trunc = 16;
    std::size_t cap_faces = 50000;
    std::size_t cap_poset = 12;
};

// The n-fold q-cone over m points. Throws Error(InvalidParameters) unless
// m, q >= 1 and n >= 0.
SimplicialComplex delta_complex(int m, int q, int n);

// T((m+(q-m)x)/(q(1-x)) | (1-x)/q): row n is the f-vector of delta_complex(m,q,n).
RiordanPair matrix_F(int m, int q, std::size_t trunc);
// [q C(n,k+1) + m C(n,k)] q^k.
Integer closed_form_f(int m, int q, int n, int k);
// Total number of nonempty faces of delta_complex(m,q,n).
Integer closed_form_face_count(int m, int q, int n);
// T((m+(q-m)x)/q^2 | (1-x)/q): row n >= 1 is the extended f-vector of delta_complex(m,q,n-1).
RiordanPair matrix_F_ext(int m, int q, std::size_t trunc);

struct HMatrix {
    // Row 0 is ((m-1)/(q-1), 0, ...); row i >= 1 is the h-vector of delta_complex(m,q,i-1).
    FiniteMatrix matrix;
    // Rows whose f-vector came from face enumeration rather than the closed form.
    std::vector<bool> enumerated;
};
// Throws Error(InvalidParameters) unless m, q >= 2.
HMatrix matrix_H(int m, int q, std::size_t depth, std::size_t cap_faces = 50000);

RiordanPair d_left(int m, int q, std::size_t trunc);
RiordanPair d_right(int m, int q, std::size_t trunc);
// H = D_L F~ and H = F~ D_R, the simplified regular forms when m = q, and
// F~_{q,q} = T(1/q | (1+(q-1)x)/q) P = P T(1/q | 1/q) with P the Pascal matrix.
std::map<std::string, bool> factorizations(int m, int q, const FamilyConfig& config = {});

struct ChiSequence {
    // 1 + (m-1)(1-q)^n for n < depth.
    std::vector<Integer> values;
    std::vector<Integer> alternating_sums;
    std::vector<Integer> ftrm;
    bool agree = false;
};
ChiSequence chi_sequence(int m, int q, const FamilyConfig& config = {});

struct MuIdentity {
    // sum_k (-1)^k f_{nk} / m^{k+1} = 1 on every row.
    bool weighted = false;
    // F applied to 1/(m+x) equals 1/(1-x).
    bool ftrm = false;
    // sum_k (-1)^k m^{n-k} f_{nk} = m^{n+1}.
    bool integer_form = false;
    bool holds() const { return weighted && ftrm && integer_form; }
};
MuIdentity mu_identity(int m, int q, const FamilyConfig& config = {});

struct ShiftIdentities {
    // f_{n,k} = sum_j q^{s-j} C(s,j) f_{n-s,k-s+j}, for n, k >= s.
    bool a_seq = false;
    // f_{n,k} = sum_j q^s C(s+j-1,j) f_{n-s-j,k-s}, for n, k >= s.
    bool g_seq = false;
    // f_{n,k} = sum_j q^k C(s,j) f_{n-s-j,k-s}; expected to fail.
    bool g_seq_literal = false;
};
ShiftIdentities shift_identities(int m, int q, int s, const FamilyConfig& config = {});

/// Diagonal matrix with formula values and per-entry independent checks.
struct CheckedDiagonal {
    std::vector<Integer> diagonal;
    // Entry n was recomputed from the n-th complex or poset.
    std::vector<bool> verified;
    // Every recomputed entry agreed with the formula.
    bool agree = true;
};
// (m-1)(q-1)^n, checked against reduced Betti numbers. For q = 1 the only
// nonzero entry is m-1 at n = 0.
CheckedDiagonal matrix_B(int m, int q, const FamilyConfig& config = {});
// m!(q!)^n, checked against automorphism counts of the delta posets.
CheckedDiagonal matrix_C(int m, int q, const FamilyConfig& config = {});
// (m-1)(q-1)^n, checked against determinants of the delta posets.
CheckedDiagonal matrix_Ndet(int m, int q, const FamilyConfig& config = {});

struct FamilyReport {
    int m = 0;
    int q = 0;
    std::size_t depth = 0;
    FiniteMatrix F;
    std::vector<bool> f_enumerated;
    FiniteMatrix Fext;
    bool has_H = false;
    HMatrix H;
    CheckedDiagonal B;
    CheckedDiagonal C;
    CheckedDiagonal Ndet;
    ChiSequence chi;
    std::map<std::string, bool> verdicts;
    // Evaluated but not part of the pass/fail gate.
    std::map<std::string, bool> informational;

    bool all_pass() const;
};
FamilyReport build_family_report(int m, int q, const FamilyConfig& config = {});

} // namespace riocomb

#endif
