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

#include "polcert/congruence.hpp"
#include "polcert/mat3.hpp"
#include "polcert/wordeval.hpp"

using namespace polcert;
using namespace polcert::matrep;
using fields::GF3;

namespace {

std::mt19937 rng(31337);

Mat3Gf3 random_invertible_gf3() {
    std::uniform_int_distribution<int> d(0, 19682);
    for (;;) {
        Mat3Gf3 m = gf3_decode(d(rng));
        if (!m.det().is_zero()) return m;
    }
}

fpgroup::Word random_word(int len) {
    std::uniform_int_distribution<int> d(0, 3);
    std::vector<std::int32_t> letters;
    for (int i = 0; i < len; ++i) {
        int v = d(rng);
        letters.push_back(v < 2 ? v + 1 : -(v - 1));
    }
    return fpgroup::Word::from_letters(letters);
}

}  // namespace

TEST_SUITE_BEGIN("mat3");

TEST_CASE("determinant, adjugate, inverse over GF3") {
    for (int i = 0; i < 500; ++i) {
        Mat3Gf3 m = random_invertible_gf3();
        CHECK((m * m.inverse()).is_identity());
        CHECK((m.inverse() * m).is_identity());
        CHECK(m.adjugate() == m.inverse().scaled(m.det()));
    }
}

TEST_CASE("det is multiplicative") {
    for (int i = 0; i < 500; ++i) {
        Mat3Gf3 a = random_invertible_gf3(), b = random_invertible_gf3();
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("projective canonical form") {
    auto rho = rho_generators();
    Mat3<fields::RatFuncGF3> m = rho.image_a();
    ProjMat3<fields::RatFuncGF3> p1(m);
    ProjMat3<fields::RatFuncGF3> p2(m.scaled(fields::RatFuncGF3::t(2)));
    CHECK(p1 == p2);
    // first nonzero entry is 1
    bool found = false;
    for (const auto& e : p1.m.e) {
        if (e.is_zero()) continue;
        CHECK(e == fields::RatFuncGF3::one());
        found = true;
        break;
    }
    CHECK(found);
    CHECK_THROWS_AS(ProjMat3<fields::RatFuncGF3>(Mat3<fields::RatFuncGF3>::zero()), Error);
}

TEST_CASE("evaluation is a homomorphism (char 3, exact)") {
    auto rho = rho_generators();
    for (int i = 0; i < 300; ++i) {
        fpgroup::Word w1 = random_word(6), w2 = random_word(6);
        CHECK(rho.eval(w1 * w2) == rho.eval(w1) * rho.eval(w2));
        CHECK(rho.eval(w1.inverse()) == rho.eval(w1).inverse());
    }
}

TEST_CASE("evaluation is a homomorphism (char 0, projective)") {
    auto pi = pi_generators();
    for (int i = 0; i < 100; ++i) {
        fpgroup::Word w1 = random_word(5), w2 = random_word(5);
        CHECK(ProjMat3(pi.eval(w1 * w2)) == ProjMat3(pi.eval(w1) * pi.eval(w2)));
        CHECK(ProjMat3(pi.eval(w1.inverse())) == ProjMat3(pi.eval(w1).inverse()));
    }
}

TEST_CASE("elementary matrices") {
    using fields::RatFuncGF3;
    Mat3<RatFuncGF3> e = Mat3<RatFuncGF3>::elementary(0, 2, RatFuncGF3::t(3));
    CHECK(e.at(0, 2) == RatFuncGF3::t(3));
    CHECK(e.det() == RatFuncGF3::one());
    CHECK_THROWS_AS(Mat3<RatFuncGF3>::elementary(1, 1, RatFuncGF3::one()), Error);
}

TEST_CASE("gf3 codes round trip") {
    for (int code = 0; code < 19683; code += 37) CHECK(gf3_code(gf3_decode(code)) == code);
}

TEST_SUITE_END();
