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

#ifndef RIOCOMB_VERIFY_HPP
#define RIOCOMB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "riocomb/families.hpp"
#include "riocomb/scomplex.hpp"

namespace riocomb {

enum class ClaimStatus { Pass, Fail, Skipped };
std::string_view status_name(ClaimStatus s);

/// One checked statement. `detail` carries counts, timings and the first
/// counterexample when there is one.
struct Claim {
    std::string id;
    std::string statement;
    ClaimStatus status = ClaimStatus::Skipped;
    nlohmann::json detail = nlohmann::json::object();
};

struct VerifyReport {
    std::vector<Claim> claims;
    bool passed() const;
    // {"claims": [{"id", "paper_ref", "status", "detail"}, ...]}
    nlohmann::json to_json() const;
};

enum class Suite { All, Families, Riordan, Poset, Complex };
// Throws Error(InvalidParameters) for unknown names.
Suite parse_suite(std::string_view name);

struct VerifyOptions {
    FamilyConfig family;
    std::uint32_t seed = 1729;
    std::size_t corpus_size = 100;
};

VerifyReport run_suite(Suite suite, const VerifyOptions& options = {});

// Deterministic mix of pure and non-pure complexes on at most 8 vertices.
std::vector<SimplicialComplex> random_corpus(std::uint32_t seed, std::size_t count);

Claim claim_f_vector_closed_form(const VerifyOptions& o);
Claim claim_printed_tables(const VerifyOptions& o);
Claim claim_h_matrix(const VerifyOptions& o);
Claim claim_worked_example(const VerifyOptions& o);
Claim claim_euler_characteristic(const VerifyOptions& o);
Claim claim_mu_identity(const VerifyOptions& o);
Claim claim_betti_diagonal(const VerifyOptions& o);
Claim claim_riordan_group_laws(const VerifyOptions& o);
Claim claim_dehn_sommerville(const VerifyOptions& o);
Claim claim_partitionability(const VerifyOptions& o);
Claim claim_poset_layer(const VerifyOptions& o);
Claim claim_factorizations(const VerifyOptions& o);
Claim claim_family_reports(const VerifyOptions& o);

} // namespace riocomb

#endif
