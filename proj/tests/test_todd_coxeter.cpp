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

#include "polcert/error.hpp"

#include "polcert/finite_group.hpp"
#include "polcert/todd_coxeter.hpp"

using namespace polcert;
using namespace polcert::fpgroup;

TEST_SUITE_BEGIN("todd_coxeter");

TEST_CASE("the quadratic universal presentation has 27 cosets") {
    Presentation p = pol2_presentation();
    CosetTable t = todd_coxeter(p, {}, 100000);
    REQUIRE(t.complete);
    CHECK(t.index() == 27);
    CHECK(verify_coset_table(t, p, {}));
    // cross-check against the independently built model group order
    CHECK(t.index() == polymap::FiniteGroup::c9_semidirect_c3().order());
}

TEST_CASE("one-relator collapse") {
    Presentation p = parse_presentation("gens: a\nrels: a");
    CosetTable t = todd_coxeter(p, {}, 100);
    REQUIRE(t.complete);
    CHECK(t.index() == 1);
}

TEST_CASE("C3 x C3 has 9 cosets, matching the direct multiplication table") {
    Presentation p = parse_presentation("gens: a b\nrels: a^3, b^3, [a,b]");
    CosetTable t = todd_coxeter(p, {}, 1000);
    REQUIRE(t.complete);
    // oracle: the direct product of two cyclic(3) tables
    polymap::FiniteGroup oracle = polymap::FiniteGroup::direct_product(
        polymap::FiniteGroup::cyclic(3), polymap::FiniteGroup::cyclic(3));
    CHECK(t.index() == oracle.order());
    CHECK(verify_coset_table(t, p, {}));
}

TEST_CASE("coincidence-heavy examples") {
    // S3
    Presentation s3 = parse_presentation("gens: a b\nrels: a^2, b^2, (a*b)^3");
    CosetTable t1 = todd_coxeter(s3, {}, 1000);
    REQUIRE(t1.complete);
    CHECK(t1.index() == 6);
    CHECK(verify_coset_table(t1, s3, {}));

    // quaternion group of order 8
    Presentation q8 = parse_presentation("gens: a b\nrels: a^4, a^2*b^-2, b^-1*a*b*a");
    CosetTable t2 = todd_coxeter(q8, {}, 1000);
    REQUIRE(t2.complete);
    CHECK(t2.index() == 8);
    CHECK(verify_coset_table(t2, q8, {}));

    // full collapse
    Presentation triv = parse_presentation("gens: a b\nrels: a, b");
    CosetTable t3 = todd_coxeter(triv, {}, 1000);
    REQUIRE(t3.complete);
    CHECK(t3.index() == 1);
}

TEST_CASE("subgroup enumeration") {
    Presentation p = pol2_presentation();
    CosetTable t = todd_coxeter(p, {parse_word("a", p.names)}, 1000);
    REQUIRE(t.complete);
    CHECK(t.index() == 3);  // <a> has order 9 in the order-27 group
    CHECK(verify_coset_table(t, p, {parse_word("a", p.names)}));
}

TEST_CASE("overflow reports incomplete, never a wrong count") {
    Presentation free2 = parse_presentation("gens: a b\nrels:");
    CosetTable t = todd_coxeter(free2, {}, 100);
    CHECK(!t.complete);
    CHECK_THROWS_AS(todd_coxeter(free2, {}, 0), Error);
}

TEST_CASE("standardized tables are deterministic") {
    Presentation p = pol2_presentation();
    CosetTable t1 = todd_coxeter(p, {}, 100000);
    CosetTable t2 = todd_coxeter(p, {}, 100000);
    CHECK(t1.rows == t2.rows);
    // breadth-first numbering: row 0 neighbors come before later discoveries
    CHECK(t1.rows[0][0] == 1);  // coset 0 * a = coset 1
}

TEST_SUITE_END();
