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

#include <random>

#include "polcert/search.hpp"
#include "polcert/wordeval.hpp"

using namespace polcert;
using namespace polcert::matrep;
using fields::Eisen;
using fields::RatFuncGF3;
using fields::TowerElement;
using fpgroup::Word;

namespace {
const std::vector<std::string> kAB = {"a", "b"};
}

TEST_SUITE_BEGIN("reps");

TEST_CASE("characteristic-0 image anchors") {
    auto pi = pi_generators();
    CHECK(pi.image_a().at(2, 0) ==
          TowerElement::r_power(Eisen(Rat(-1), Rat(-1)), 2));          // -(w+1) r^2
    CHECK(pi.image_b().at(1, 0) == TowerElement::r_power(Eisen::one(), 1));  // r
    CHECK(pi.image_b().at(0, 0).is_zero());
    CHECK(pi.image_a().at(0, 1) ==
          TowerElement::r_power(Eisen(Rat(-1, 3), Rat(-2, 3)), 2));    // (-2w-1)/3 r^2
    // both images have determinant exactly 1 in the tower field
    CHECK(pi.image_a().det() == TowerElement::one());
    CHECK(pi.image_b().det() == TowerElement::one());
}

TEST_CASE("characteristic-3 determinants via independent cofactor expansion") {
    auto rho = rho_generators();
    auto cofactor_det = [](const Mat3<RatFuncGF3>& m) {
        // expand along the second row rather than the first
        RatFuncGF3 c0 = m.at(0, 1) * m.at(2, 2) - m.at(0, 2) * m.at(2, 1);
        RatFuncGF3 c1 = m.at(0, 0) * m.at(2, 2) - m.at(0, 2) * m.at(2, 0);
        RatFuncGF3 c2 = m.at(0, 0) * m.at(2, 1) - m.at(0, 1) * m.at(2, 0);
        return -m.at(1, 0) * c0 + m.at(1, 1) * c1 - m.at(1, 2) * c2;
    };
    CHECK(cofactor_det(rho.image_a()) == RatFuncGF3::one());
    CHECK(cofactor_det(rho.image_b()) == RatFuncGF3::one());
    CHECK(rho.image_b().at(2, 2) == RatFuncGF3::t(1));
}

TEST_CASE("trace witnesses") {
    auto rho = rho_generators();
    CHECK(rho.image_b().trace() == RatFuncGF3::t(1));
    Mat3<RatFuncGF3> a2 = rho.image_a() * rho.image_a();
    CHECK(a2.at(0, 0) == RatFuncGF3(2) * RatFuncGF3::t(1));
    CHECK(a2.at(1, 1).is_zero());
    CHECK(a2.at(2, 2) == RatFuncGF3(2) * RatFuncGF3::t(1));
    CHECK(a2.trace() == RatFuncGF3::t(1));  // 4t = t mod 3
}

TEST_CASE("relators hold exactly in characteristic 3 and projectively in characteristic 0") {
    fpgroup::Presentation gamma = fpgroup::gamma_presentation();
    auto rho = rho_generators();
    RelatorCheck rc3 = check_relators(rho, gamma);
    CHECK(rc3.ok);
    for (const Word& r : gamma.relators) CHECK(rho.eval(r).is_identity());

    auto pi = pi_generators();
    RelatorCheck rc0 = check_relators(pi, gamma);
    CHECK(rc0.ok);
    REQUIRE(rc0.scalar_factors.size() == 3);
}

TEST_CASE("a genuinely false relator fails") {
    // (ab)^3 is a consequence of (ba)^3 by conjugation, so it must PASS;
    // (ab^-1)^3 maps to 6a != 0 in the abelianization, so it must fail.
    fpgroup::Presentation gamma = fpgroup::gamma_presentation();
    auto pi = pi_generators();
    auto rho = rho_generators();

    fpgroup::Presentation conseq({"a", "b"}, {fpgroup::parse_word("(a*b)^3", kAB)});
    CHECK(check_relators(pi, conseq).ok);
    CHECK(check_relators(rho, conseq).ok);

    fpgroup::Presentation fake({"a", "b"}, {fpgroup::parse_word("(a*b^-1)^3", kAB)});
    RelatorCheck f0 = check_relators(pi, fake);
    CHECK(!f0.ok);
    CHECK(f0.failed_relator == 0);
    CHECK(!check_relators(rho, fake).ok);

    fpgroup::Presentation fake2({"a", "b"}, {fpgroup::parse_word("a^9", kAB)});
    CHECK(!check_relators(pi, fake2).ok);
    CHECK(!check_relators(rho, fake2).ok);
}

TEST_CASE("grading: degree mod 3 detects the kernel") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(0, 3);
    auto pi = pi_generators();
    for (int i = 0; i < 400; ++i) {
        std::vector<std::int32_t> letters;
        int len = 1 + static_cast<int>(rng() % 10);
        for (int k = 0; k < len; ++k) {
            int v = d(rng);
            letters.push_back(v < 2 ? v + 1 : -(v - 1));
        }
        Word w = Word::from_letters(letters);
        long long deg = graded_degree(w);
        CHECK(((deg % 3 + 3) % 3 == 0) == (mu_image(w) == 0));
        // every entry of the evaluation is a pure r-power of degree d mod 3
        Mat3<TowerElement> m = pi.eval(w);
        int expect = static_cast<int>(((deg % 3) + 3) % 3);
        for (const auto& x : m.e) {
            if (x.is_zero()) continue;
            auto pure = x.pure_r_component();
            REQUIRE(pure.has_value());
            CHECK(pure->first == expect);
        }
    }
}

TEST_CASE("infinite order certificates") {
    auto rho = rho_generators();
    auto ra = infinite_order_certificate(rho, fpgroup::parse_word("a", kAB));
    CHECK(ra.certified);
    CHECK(ra.witness_power == 2);
    CHECK(ra.witness_trace == "t");

    auto rb = infinite_order_certificate(rho, fpgroup::parse_word("b", kAB));
    CHECK(rb.certified);
    CHECK(rb.witness_power == 1);
    CHECK(rb.witness_trace == "t");

    // finite-order elements must never be certified
    CHECK(!infinite_order_certificate(rho, fpgroup::parse_word("b*a", kAB)).certified);
    CHECK(!infinite_order_certificate(rho, fpgroup::parse_word("a*b^-1*a", kAB)).certified);
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        std::uniform_int_distribution<int> d(0, 3);
        std::vector<std::int32_t> letters;
        for (int k = 0; k < 5; ++k) {
            int v = d(rng);
            letters.push_back(v < 2 ? v + 1 : -(v - 1));
        }
        Word g = Word::from_letters(letters);
        Word conj = fpgroup::parse_word("b*a", kAB).conjugated_by(g);
        CHECK(!infinite_order_certificate(rho, conj).certified);
    }
}

TEST_SUITE_END();
