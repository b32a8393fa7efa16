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

#include <doctest.h>

#include "polcert/pipelines.hpp"
#include "polcert/search.hpp"

using namespace polcert;
using namespace polcert::matrep;
using fields::GF3;
using fields::RatFuncGF3;
using fpgroup::Word;

namespace {
const std::vector<std::string> kAB = {"a", "b"};

std::vector<LabeledMat<RatFuncGF3>> kernel_generators() {
    cert::KernelData kd = cert::compute_kernel_data();
    std::vector<LabeledMat<RatFuncGF3>> gens;
    for (size_t k = 0; k < kd.mu_kernel.schreier_generators.size(); ++k)
        gens.push_back({kd.mu_kernel.schreier_generators[k], kd.rho_images[k]});
    return gens;
}
}  // namespace

TEST_SUITE_BEGIN("search");

TEST_CASE("identity target is the empty word") {
    auto rho = rho_generators();
    SearchLimits lim;
    lim.max_len = 2;
    auto out = elementary_word_search_u(rho, kernel_generators(),
                                        Mat3<RatFuncGF3>::identity(), lim);
    REQUIRE(out.found);
    CHECK(out.word.empty());
}

TEST_CASE("a reachable product is found and post-verified") {
    auto rho = rho_generators();
    auto gens = kernel_generators();
    Mat3<RatFuncGF3> target = gens[0].mat * gens[2].mat.inverse() * gens[1].mat;
    SearchLimits lim;
    lim.max_len = 3;
    lim.max_entry_degree = 16;
    lim.meet_in_middle = false;
    auto out = elementary_word_search_u(rho, gens, target, lim);
    REQUIRE(out.found);
    CHECK(rho.eval(out.word) == target);
    CHECK(out.word.length() <= (gens[0].word * gens[2].word.inverse() * gens[1].word).length());
}

TEST_CASE("meet in the middle reaches double depth") {
    auto rho = rho_generators();
    auto gens = kernel_generators();
    // a product of length 4 in the generators, searched with per-side bound 2
    Mat3<RatFuncGF3> target =
        gens[0].mat * gens[1].mat * gens[2].mat.inverse() * gens[3].mat;
    SearchLimits lim;
    lim.max_len = 2;
    lim.max_entry_degree = 20;
    lim.meet_in_middle = true;
    auto out = elementary_word_search_u(rho, gens, target, lim);
    REQUIRE(out.found);
    CHECK(rho.eval(out.word) == target);
}

TEST_CASE("unreachable targets give an explicit inconclusive, never a guess") {
    auto rho = rho_generators();
    SearchLimits lim;
    lim.max_len = 2;
    lim.max_entry_degree = 2;
    auto out = elementary_word_search_u(rho, kernel_generators(), elementary_u(2, 3, 2), lim);
    CHECK(!out.found);
    CHECK(out.stats.hit_limits);
}

TEST_CASE("steinberg identities and excluded pairs") {
    using fields::PolyGF3;
    // [E12(u^2), E23(u^3)] = E13(u^5), by exact multiplication
    Mat3<RatFuncGF3> a = elementary_u(1, 2, 2);
    Mat3<RatFuncGF3> b = elementary_u(2, 3, 3);
    CHECK(a * b * a.inverse() * b.inverse() == elementary_u(1, 3, 5));

    // [E12(x), E21(y)] is not elementary: its diagonal moves away from 1
    Mat3<RatFuncGF3> c = elementary_u(1, 2, 2);
    Mat3<RatFuncGF3> d = elementary_u(2, 1, 2);
    Mat3<RatFuncGF3> comm = c * d * c.inverse() * d.inverse();
    CHECK(comm.at(0, 0) != RatFuncGF3::one());

    auto rho = rho_generators();
    std::map<std::string, Word> empty_found;
    SteinbergReport rep = steinberg_closure(empty_found, rho);
    CHECK(rep.identities_verified);
    CHECK(!rep.all_targets_found);
    CHECK(rep.missing.size() == 12);
    CHECK(rep.verified_identities.size() == 24);  // 6 triples x 4 power pairs
}

TEST_CASE("bounded no-relation enumeration") {
    auto pi = pi_generators();
    Word a = Word::gen(0), b = Word::gen(1);

    // the pair (a, b) has the relator (ba)^3 at length 6
    NoRelationReport rep = bounded_no_relation(pi, a, b, 6);
    bool found_relator = false;
    for (const Word& r : rep.relations_found)
        if (r.length() == 6) found_relator = true;
    CHECK(found_relator);

    // nothing shorter than 6 letters collapses
    NoRelationReport rep5 = bounded_no_relation(pi, a, b, 5);
    CHECK(rep5.relations_found.empty());

    // a finite-order element against itself: relation found at its order
    auto rho = rho_generators();
    Word ba = fpgroup::parse_word("b*a", kAB);
    NoRelationReport repf = bounded_no_relation(rho, ba, ba.inverse(), 3);
    bool found_cube = false;
    for (const Word& r : repf.relations_found)
        if (r == Word::gen(0).pow(3) || r == Word::gen(0).pow(-3)) found_cube = true;
    CHECK(found_cube);
}

TEST_CASE("nilpotency witnesses at small levels") {
    cert::KernelData kd = cert::compute_kernel_data();
    std::vector<Word> words = cert::second_kernel_words(kd.mu_kernel, kd.rho_mod_u);
    auto rho = rho_generators();

    NilpotencyWitness w2 = nilpotency_witness(rho, words, 2, 6);
    CHECK(w2.depth == 1);
    CHECK(w2.depth_bound_checked);

    NilpotencyWitness w3 = nilpotency_witness(rho, words, 3, 6);
    CHECK(w3.depth == 2);
    CHECK(w3.depth_bound_checked);
    CHECK(w3.witness_words.size() == 2);
}

TEST_CASE("truncation mod u^n") {
    auto rho = rho_generators();
    Mat3<RatFuncGF3> m = rho.eval(fpgroup::parse_word("b*a", kAB));
    // I + E21 + 2u(E31+E32): truncating mod u kills the 2u terms
    Mat3<RatFuncGF3> t1 = truncate_mod_u(m, 1);
    CHECK(t1.at(2, 0).is_zero());
    CHECK(t1.at(1, 0) == RatFuncGF3::one());
    CHECK(truncate_mod_u(m, 2) == m);
}

TEST_SUITE_END();
