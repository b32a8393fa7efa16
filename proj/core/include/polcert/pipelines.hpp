/*
   Copyright 2026 The polcert authors

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

#ifndef POLCERT_PIPELINES_HPP
#define POLCERT_PIPELINES_HPP

#include <string>
#include <vector>

#include "polcert/automorphism.hpp"
#include "polcert/certificate.hpp"
#include "polcert/congruence.hpp"
#include "polcert/finite_group.hpp"
#include "polcert/runconfig.hpp"
#include "polcert/schreier.hpp"
#include "polcert/search.hpp"

namespace polcert::cert {

/// Deliberate single-entry mutations used by the negative controls.
enum class Corruption { None, PiA, RhoB, GammaRelator };

// --- shared intermediate data -------------------------------------------

/// The index-3 kernel generators of the tautological map onto C3 and their
/// images on both sides.
struct KernelData {
    fpgroup::SubgroupData mu_kernel;                       // 4 Schreier generators
    std::vector<matrep::Mat3<fields::Eisen>> pi_reps;      // normalized integral reps
    std::vector<matrep::Mat3Gf3> pi_mod_lambda;
    std::vector<matrep::Mat3<fields::RatFuncGF3>> rho_images;
    std::vector<matrep::Mat3Gf3> rho_mod_u;
};
KernelData compute_kernel_data();

/// Schreier generators (as words in a, b) of the kernel of the map from the
/// index-3 kernel onto its order-27 level-0 image.
std::vector<fpgroup::Word> second_kernel_words(const fpgroup::SubgroupData& mu_kernel,
                                               const std::vector<matrep::Mat3Gf3>& level0_images);

struct Level1Analysis {
    int raw_dim = 0;        // span of the logs alone
    int quotient_dim = 0;   // modulo the scalar line (char 0) / raw (char 3)
    bool matches_displayed_set = false;  // char 0 only
    std::size_t generator_count = 0;
};
Level1Analysis level1_analysis_char0(const std::vector<fpgroup::Word>& kernel_words);
Level1Analysis level1_analysis_char3(const std::vector<fpgroup::Word>& kernel_words);

// --- verification pipelines ----------------------------------------------

std::vector<ClaimRecord> verify_pol2(const RunConfig& cfg, Corruption c = Corruption::None);
std::vector<ClaimRecord> verify_presentation(const RunConfig& cfg,
                                             Corruption c = Corruption::None);
std::vector<ClaimRecord> verify_char0(const RunConfig& cfg, Corruption c = Corruption::None);
std::vector<ClaimRecord> verify_char3(const RunConfig& cfg, Corruption c = Corruption::None);
std::vector<ClaimRecord> verify_remark(const RunConfig& cfg);
std::vector<ClaimRecord> verify_nilpotency(const RunConfig& cfg);

/// Classification of unital polynomial maps from C3 (or C2) into h with the
/// cross-oracle comparison against the matching universal presentation.
std::vector<ClaimRecord> classify_pipeline(const RunConfig& cfg, const polymap::FiniteGroup& h,
                                           const std::string& group_name, int degree,
                                           bool domain_c2);

/// Elementary-matrix word search. target_spec: "E13:u^2", "E21:u^3" (char 3),
/// "E13:3", "E13:3w" (char 0), or "identity". An optional check word turns
/// the run into verification only.
std::vector<ClaimRecord> search_pipeline(const RunConfig& cfg, int characteristic,
                                         const std::string& target_spec,
                                         const std::string& check_word = "");

/// Searches all twelve u-targets and runs the Steinberg bookkeeping.
std::vector<ClaimRecord> search_all_u_targets(const RunConfig& cfg);

/// Bounded no-relation evidence for a pair of words under pi.
std::vector<ClaimRecord> no_relation_pipeline(const RunConfig& cfg, const std::string& x,
                                              const std::string& y);

/// Dispatch: target in {pol2, presentation, char0, char3, remark,
/// nilpotency, all}. Top-level targets of "all" may run concurrently
/// (POLCERT_THREADS); the merge is ordered and deterministic.
Certificate run_verify(const std::string& target, const RunConfig& cfg,
                       Corruption c = Corruption::None);

}  // namespace polcert::cert

#endif
