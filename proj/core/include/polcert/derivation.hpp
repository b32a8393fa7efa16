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

#ifndef POLCERT_DERIVATION_HPP
#define POLCERT_DERIVATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "polcert/word.hpp"

namespace polcert::fpgroup {

/// One inference rule of the equality checker. Every rule is mechanically
/// checkable from the step data alone; nothing is searched.
enum class Rule {
    Relator,             // lhs = given relator, rhs = 1
    FreeReduction,       // lhs and rhs are the same reduced word
    Symmetry,            // from A = B conclude B = A
    Transitivity,        // from A = B, B = C conclude A = C
    ProductBothSides,    // from A = B, C = D conclude AC = BD
    InverseBothSides,    // from A = B conclude A^-1 = B^-1
    Conjugate,           // from A = B conclude cAc^-1 = cBc^-1
    PowerBothSides,      // from A = B conclude A^k = B^k
    ExponentArithmetic,  // from x^n = 1 conclude x^k = x^m when k = m (mod n)
};

const char* rule_name(Rule r);

/// A claimed equality lhs = rhs together with its justification. Premises
/// refer to earlier steps by index; relator steps refer to the given
/// relator list.
struct DerivationStep {
    Word lhs, rhs;
    Rule rule = Rule::FreeReduction;
    int premise1 = -1;
    int premise2 = -1;
    int relator_index = -1;
    Word base;                 // ExponentArithmetic: the x in x^n = 1
    long long exponent = 0;    // PowerBothSides: k; ExponentArithmetic: k
    long long exponent2 = 0;   // ExponentArithmetic: m
    long long modulus = 0;     // ExponentArithmetic: n
    std::string note;
};

struct DerivationScript {
    std::vector<std::pair<std::string, Word>> named_words;   // e.g. z, w, v
    std::vector<DerivationStep> steps;
    std::vector<std::pair<Word, Word>> conclusions;          // must all be proven
};

struct DerivationVerdict {
    bool valid = false;
    int failed_step = -1;       // -1 when valid or when a conclusion is missing
    std::string reason;
};

/// Validate every step against the given relators, then check that each
/// conclusion (or its mirror image) was proven. Rejects report the first
/// offending step index and the reason.
DerivationVerdict check_derivation(const std::vector<Word>& relators,
                                   const DerivationScript& script);

/// The eight relations satisfied by the two unitalized first differences of
/// a cubic map from C3: the quadratic presentation's relators instantiated
/// at the pairs (a^-1 b a^-1, a^-1 b^-1) and (b^-1 a^-1, b^-1 a b^-1).
std::vector<Word> quadratic_consequence_relators();

/// The transcription of the chain deriving z^3 = w^3 = v^3 = 1 (and the
/// centrality of z) from the eight relations above, where z = a^-1 b^-1,
/// w = a^-1 b a^-1, v = z w^-1. Its conclusions include the three relators
/// of the cubic universal group.
DerivationScript cubic_derivation_script();

/// A deliberately broken variant (claims z^2 = 1); must be rejected.
DerivationScript bogus_z2_script();

}  // namespace polcert::fpgroup

#endif
