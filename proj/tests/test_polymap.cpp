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

#include <set>
#include <sstream>

#include "polcert/homcount.hpp"
#include "polcert/polymap.hpp"
#include "polcert/presentation.hpp"

using namespace polcert;
using namespace polcert::polymap;

namespace {

MapTable make_map(const FiniteGroup& g, const FiniteGroup& h, std::vector<int> images) {
    return MapTable{&g, &h, std::move(images)};
}

}  // namespace

TEST_SUITE_BEGIN("polymap");

TEST_CASE("finite group validation") {
    // corrupt a cyclic table: breaks associativity or inverses
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    std::vector<int> bad;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) bad.push_back(c4.mul(a, b));
    bad[5] = 3;  // 1*1 := 3
    CHECK_THROWS_AS(FiniteGroup{bad}, Error);
}

TEST_CASE("group ingestion formats") {
    FiniteGroup s3 = FiniteGroup::parse("perm 3\n(1 2 3)\n(1 2)\n");
    CHECK(s3.order() == 6);
    CHECK(is_isomorphic_small(s3, FiniteGroup::symmetric3()));

    std::ostringstream os;
    s3.write_table(os);
    FiniteGroup reparsed = FiniteGroup::parse(os.str());
    CHECK(reparsed.order() == 6);
    CHECK(is_isomorphic_small(reparsed, s3));

    CHECK_THROWS_AS(FiniteGroup::parse("order 2\n0 1\n"), Error);   // truncated
    CHECK_THROWS_AS(FiniteGroup::parse("perm 3\n"), Error);         // no generators
    CHECK_THROWS_AS(FiniteGroup::parse("wat 3\n"), Error);
}

TEST_CASE("delta of a homomorphism is constant") {
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    FiniteGroup s3 = FiniteGroup::symmetric3();
    // all homomorphisms C3 -> S3
    for (int img = 0; img < 6; ++img) {
        if (s3.element_order(img) == 2) continue;
        MapTable phi = make_map(c3, s3, {0, img, s3.mul(img, img)});
        REQUIRE(phi.is_homomorphism());
        for (int k = 0; k < 3; ++k) {
            MapTable d = delta(phi, k);
            for (int g = 0; g < 3; ++g) CHECK(d(g) == phi(k));
        }
    }
}

TEST_CASE("delta table example in S3") {
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    FiniteGroup s3 = FiniteGroup::symmetric3();
    // phi(1) = e, phi(s) = some 3-cycle p, phi(s^2) = some transposition q;
    // then (delta_s phi)(s) = phi(s^2) phi(s)^-1 = q p^-1, computed directly.
    for (int p = 0; p < 6; ++p)
        for (int q = 0; q < 6; ++q) {
            if (s3.element_order(p) != 3 || s3.element_order(q) != 2) continue;
            MapTable phi = make_map(c3, s3, {0, p, q});
            MapTable d = delta(phi, 1);
            CHECK(d(1) == s3.mul(q, s3.inverse(p)));
        }
}

TEST_CASE("beta is unital for every map and direction") {
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    FiniteGroup s3 = FiniteGroup::symmetric3();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            MapTable phi = make_map(c3, s3, {0, i, j});
            for (int k = 0; k < 3; ++k) {
                MapTable b = beta(phi, k);
                CHECK(b(0) == 0);
                // beta_s(s) = phi(s)^-1 phi(s^2) phi(s)^-1
                if (k == 1)
                    CHECK(b(1) == s3.mul(s3.mul(s3.inverse(i), j), s3.inverse(i)));
                // beta_s2(s^2) = phi(s^2)^-1 phi(s) phi(s^2)^-1
                if (k == 2)
                    CHECK(b(2) == s3.mul(s3.mul(s3.inverse(j), i), s3.inverse(j)));
            }
        }
}

TEST_CASE("degree testing basics") {
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    FiniteGroup s3 = FiniteGroup::symmetric3();
    MapTable ident = make_map(c3, s3, {0, 0, 0});
    CHECK(degree_at_most(ident, -1));
    MapTable constant_unital = ident;  // only unital constant is trivial
    CHECK(degree_at_most(constant_unital, 0));

    for (int img = 0; img < 6; ++img) {
        if (s3.element_order(img) == 2) continue;
        MapTable hom = make_map(c3, s3, {0, img, s3.mul(img, img)});
        CHECK(degree_at_most(hom, 1));
    }
    CHECK_THROWS_AS(degree_at_most(ident, -2), Error);
}

TEST_CASE("delta lowers the degree bound") {
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    FiniteGroup h = FiniteGroup::heisenberg27();
    DegreeMemo memo;
    // exhaustive over a slice of unital maps C3 -> H
    for (int i = 0; i < 27; i += 2)
        for (int j = 0; j < 27; j += 3) {
            MapTable phi = make_map(c3, h, {h.identity(), i, j});
            for (int d = 0; d <= 3; ++d) {
                if (!degree_at_most(phi, d, &memo)) continue;
                for (int k = 0; k < 3; ++k)
                    CHECK(degree_at_most(delta(phi, k), d - 1, &memo));
            }
        }
}

TEST_CASE("the universal quadratic map has degree exactly 2") {
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    Pol2Model model;
    MapTable phi = model.universal_map(c3);
    CHECK(degree_at_most(phi, 2));
    CHECK(!degree_at_most(phi, 1));
}

TEST_CASE("model structure constants") {
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    Pol2Model model;
    const FiniteGroup& m = model.group();
    CHECK(m.order() == 27);
    CHECK(m.mul(model.a(), model.a()) == model.encode(1, 0, 2));           // a^2 = (e1, s^2)
    CHECK(m.inverse(model.b()) == model.encode(1, 0, 1));                  // b^-1 = (e1, s)
    CHECK(m.inverse(model.a()) == model.encode(0, 2, 2));                  // a^-1 = (2e2, s^2)
    CHECK(Pol2Model::psi(1, 2) == std::make_pair(2, 0));                   // psi(s, s^2) = 2e1
    CHECK(Pol2Model::psi(2, 1) == std::make_pair(0, 1));                   // psi(s^2, s) = e2
    CHECK(m.exponent() == 9);
    CHECK(FiniteGroup::heisenberg27().exponent() == 3);
    (void)c3;
}

TEST_CASE("model is the split extension, not the Heisenberg group") {
    Pol2Model model;
    CHECK(is_isomorphic_small(model.group(), FiniteGroup::c9_semidirect_c3()));
    CHECK(!is_isomorphic_small(model.group(), FiniteGroup::heisenberg27()));
    CHECK(!is_isomorphic_small(model.group(), FiniteGroup::c9_times_c3()));
}

TEST_CASE("isomorphism testing is reflexive on the battery") {
    for (auto& entry : classification_battery()) {
        CHECK(is_isomorphic_small(entry.group, entry.group));
    }
    CHECK(!is_isomorphic_small(FiniteGroup::cyclic(9), FiniteGroup::cyclic(8)));
    CHECK(is_isomorphic_small(FiniteGroup::cyclic(6),
                              FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                          FiniteGroup::cyclic(3))));
}

TEST_CASE("classification of cubic maps into S3 matches the hom count") {
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    FiniteGroup s3 = FiniteGroup::symmetric3();
    auto maps = classify_unital_polynomial_maps(c3, s3, 3);
    CHECK(maps.size() == 9);

    auto tuples = fpgroup::relator_satisfying_tuples(fpgroup::gamma_presentation(), s3);
    std::set<std::pair<int, int>> from_maps, from_homs;
    for (auto& m : maps) from_maps.insert({m(1), m(2)});
    for (auto& t : tuples) from_homs.insert({t[0], t[1]});
    CHECK(from_maps == from_homs);
}

TEST_CASE("classification of quadratic maps into S3 matches the quadratic group") {
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    FiniteGroup s3 = FiniteGroup::symmetric3();
    auto maps = classify_unital_polynomial_maps(c3, s3, 2);
    CHECK(maps.size() == fpgroup::count_homs(fpgroup::pol2_presentation(), s3));
}

TEST_CASE("cubic maps from C2 into C8") {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    FiniteGroup c8 = FiniteGroup::cyclic(8);
    CHECK(classify_unital_polynomial_maps(c2, c8, 3).size() == 8);
    // quadratic maps factor through C4: #Hom(C4, C8) = 4
    CHECK(classify_unital_polynomial_maps(c2, c8, 2).size() == 4);
    CHECK(classify_unital_polynomial_maps(c2, c8, 1).size() == 2);
}

TEST_CASE("classification guard") {
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    CHECK_THROWS_AS(
        classify_unital_polynomial_maps(c3, FiniteGroup::heisenberg27(), 3, 100), Error);
}

TEST_SUITE_END();
