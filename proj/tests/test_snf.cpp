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

#include <algorithm>
#include <random>

#include "polcert/snf.hpp"

using namespace polcert;
using namespace polcert::fpgroup;

namespace {

IntMatrix mat(std::vector<std::vector<long>> rows) {
    IntMatrix m;
    for (auto& r : rows) {
        std::vector<BigInt> row(r.begin(), r.end());
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("snf");

TEST_CASE("smith form of [[3,3],[6,-3]] is diag(3,9)") {
    // hand reduction oracle: r2 -= 2 r1 gives [[3,3],[0,-9]]; c2 -= c1 gives
    // [[3,0],[0,-9]]; signs normalize to diag(3,9) and 3 | 9.
    auto d = smith_normal_form(mat({{3, 3}, {6, -3}}));
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 3);
    CHECK(d[1] == 9);
}

TEST_CASE("divisor chain is enforced") {
    auto d = smith_normal_form(mat({{2, 0}, {0, 3}}));
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 1);
    CHECK(d[1] == 6);
}

TEST_CASE("rank deficiency leaves zero factors") {
    auto d = smith_normal_form(mat({{1, 2, 3}, {2, 4, 6}}));
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 1);
    CHECK(d[1] == 0);
}

TEST_CASE("abelianization of the cubic universal group is [3, 9]") {
    auto f = abelianization(gamma_presentation());
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 3);
    CHECK(f[1] == 9);
}

TEST_CASE("abelianization of the quadratic universal group is [3, 3]") {
    auto f = abelianization(pol2_presentation());
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 3);
    CHECK(f[1] == 3);
}

TEST_CASE("free group abelianizes to free factors") {
    Presentation free2({"a", "b"}, {});
    auto f = abelianization(free2);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 0);
    CHECK(f[1] == 0);
}

TEST_CASE("invariant factors do not depend on relator order, inversion, conjugation") {
    std::mt19937 rng(99);
    Presentation base = gamma_presentation();
    auto expected = abelianization(base);
    for (int trial = 0; trial < 50; ++trial) {
        Presentation p = base;
        std::shuffle(p.relators.begin(), p.relators.end(), rng);
        for (Word& r : p.relators) {
            if (rng() % 2) r = r.inverse();
            if (rng() % 2) {
                Word c = Word::gen(static_cast<int>(rng() % 2));
                r = r.conjugated_by(c).cyclically_reduced();
            }
        }
        CHECK(abelianization(p) == expected);
    }
}

TEST_CASE("relator exponent matrix of the cubic presentation") {
    IntMatrix m = relator_exponent_matrix(gamma_presentation());
    REQUIRE(m.size() == 3);
    CHECK(m[0] == std::vector<BigInt>{3, 3});    // (ba)^3
    CHECK(m[1] == std::vector<BigInt>{6, -3});   // (ab^-1a)^3
    CHECK(m[2] == std::vector<BigInt>{0, 0});    // commutator
}

TEST_SUITE_END();
