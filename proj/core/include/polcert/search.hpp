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

#ifndef POLCERT_SEARCH_HPP
#define POLCERT_SEARCH_HPP

#include <map>
#include <string>
#include <vector>

#include "polcert/congruence.hpp"
#include "polcert/wordeval.hpp"

namespace polcert::matrep {

struct SearchLimits {
    int max_len = 12;            // half-length when meet-in-the-middle is on
    int max_entry_degree = 8;    // u-degree (char 3) / coordinate bit size (char 0)
    std::size_t max_nodes = 300000;
    long long budget_ms = 20000;
    bool meet_in_middle = true;
};

template <class F>
struct LabeledMat {
    fpgroup::Word word;
    Mat3<F> mat;
};

struct SearchStats {
    unsigned long long nodes = 0;
    bool hit_limits = false;
};

struct SearchOutcome {
    bool found = false;
    fpgroup::Word word;
    SearchStats stats;
};

/// E_ij(u^upower) over F3(t) (i, j are 1-based).
Mat3<fields::RatFuncGF3> elementary_u(int i, int j, int upower);
/// E_ij(3) or E_ij(3*omega) over Z[omega] (i, j are 1-based).
Mat3<fields::Eisen> elementary_3zw(int i, int j, bool omega_multiple);

/// Bounded word search for the target among products of the generators and
/// their inverses: breadth-first ball with canonical matrix hashing, entry
/// size pruning, and an optional meet-in-the-middle phase. A found word is
/// re-evaluated from scratch through the given evaluator before being
/// reported (no false positives); exhausting the limits yields found = false.
SearchOutcome elementary_word_search_u(const WordEvaluator<fields::RatFuncGF3>& rho,
                                       const std::vector<LabeledMat<fields::RatFuncGF3>>& gens,
                                       const Mat3<fields::RatFuncGF3>& target,
                                       const SearchLimits& limits);

/// Same search over integral Eisenstein matrices; equality is projective
/// (canonical unit representative), matching PSL3(Z[omega]). Found words are
/// re-verified by exact evaluation and descent through pi.
SearchOutcome elementary_word_search_char0(const WordEvaluator<fields::TowerElement>& pi,
                                           const std::vector<LabeledMat<fields::Eisen>>& gens,
                                           const Mat3<fields::Eisen>& target,
                                           const SearchLimits& limits);

/// Canonical projective key of an integral Eisenstein matrix: the least
/// entry string over the six unit multiples.
std::string canonical_unit_key(const Mat3<fields::Eisen>& m);

/// Steinberg-relation bookkeeping over the found elementary generators.
/// The base targets are E_ij(u^2) and E_ij(u^3) for all i != j. The
/// commutator identities [E_ij(x), E_jk(y)] = E_ik(xy) are verified by
/// exact multiplication; generation of all E_ij(f) with f in (u^2) then
/// follows, with the Euclidean-domain equality SL3(F3[u], (u^2)) =
/// E3(F3[u], (u^2)) recorded as an assumed lemma, not re-proved.
struct SteinbergReport {
    bool all_targets_found = false;
    std::vector<std::string> missing;        // e.g. "E13(u^3)"
    bool identities_verified = false;
    std::vector<std::string> verified_identities;
    std::string assumed_lemma;
    std::string verdict;
};

SteinbergReport steinberg_closure(const std::map<std::string, fpgroup::Word>& found_words,
                                  const WordEvaluator<fields::RatFuncGF3>& rho);

/// Canonical name of a base target, e.g. "E13(u^2)".
std::string elementary_target_name(int i, int j, int upower);

/// Enumerate all freely reduced words in two elements up to the given
/// length and report every one that evaluates to the identity (projectively
/// in projective mode). "No relation up to L" is evidence only.
struct NoRelationReport {
    std::vector<fpgroup::Word> relations_found;  // words over the letters x, y
    unsigned long long words_checked = 0;
    int max_length = 0;
};

template <class F>
NoRelationReport bounded_no_relation(const WordEvaluator<F>& ev, const fpgroup::Word& x,
                                     const fpgroup::Word& y, int max_len);

/// Nested-commutator witnesses in the level-1 congruence subgroup mod u^n.
/// Returns the greatest depth <= n-1 at which some nested commutator
/// [x1, [x2, [...]]] of the given level words is nontrivial mod u^n,
/// together with the witness words. depth_bound_checked reports that the
/// sampled depth-(d+1) extensions vanish mod u^n.
struct NilpotencyWitness {
    int depth = 0;
    std::vector<fpgroup::Word> witness_words;
    bool depth_bound_checked = false;
};

NilpotencyWitness nilpotency_witness(const WordEvaluator<fields::RatFuncGF3>& rho,
                                     const std::vector<fpgroup::Word>& level_words, int n,
                                     std::size_t subset_size = 8);

/// Infinite-order certificate over the characteristic-3 evaluator: if some
/// power M^j (j <= max_power) has non-constant trace, the element has
/// infinite order (finite order would make all eigenvalues roots of unity,
/// hence all traces algebraic over F3 and therefore constant in F3(t)).
/// Never certifies finiteness: the other outcome is "inconclusive".
struct InfiniteOrderResult {
    bool certified = false;
    int witness_power = 0;
    std::string witness_trace;
};

InfiniteOrderResult infinite_order_certificate(const WordEvaluator<fields::RatFuncGF3>& rho,
                                               const fpgroup::Word& w, int max_power = 3);

}  // namespace polcert::matrep

#endif
