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

#ifndef POLCERT_POLYMAP_HPP
#define POLCERT_POLYMAP_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "polcert/finite_group.hpp"

namespace polcert::polymap {

/// Finite difference in direction k: (delta_k phi)(g) = phi(kg) phi(g)^-1.
MapTable delta(const MapTable& phi, int k);

/// Unitalized first difference: beta_k(g) = phi(k)^-1 (delta_k phi)(g).
MapTable beta(const MapTable& phi, int k);

/// Memo for the recursive degree test, keyed on (images, d).
using DegreeMemo = std::map<std::pair<std::vector<int>, int>, bool>;

/// Recursive polynomial-degree test: degree <= -1 means identically the
/// identity; degree <= d means every delta_k phi has degree <= d-1.
bool degree_at_most(const MapTable& phi, int d, DegreeMemo* memo = nullptr);

/// All unital maps G -> H of degree <= d, enumerated lexicographically in
/// the images of the non-identity elements. Throws when |H|^(|G|-1)
/// exceeds the guard.
std::vector<MapTable> classify_unital_polynomial_maps(const FiniteGroup& g,
                                                      const FiniteGroup& h, int d,
                                                      std::uint64_t guard = 10'000'000);

/// The explicit order-27 model of the universal quadratic group of C3:
/// pairs (xi, g) with xi in V = (Z/3)^2 and g in C3 = {1, s, s^2},
/// multiplied by (xi, g)(eta, h) = (xi + g.eta + psi(g, h), gh) where
/// psi(g, h) = c(g) (x) h with c(g) = g - 1, in the basis e1, e2.
class Pol2Model {
  public:
    /// Builds the group and verifies its structure constants; throws on
    /// any transcription bug.
    Pol2Model();

    const FiniteGroup& group() const { return group_; }
    int a() const { return a_; }   // (0, s), image of sigma under the universal map
    int b() const { return b_; }   // (0, s^2), image of tau
    int e1() const { return encode(1, 0, 0); }
    int e2() const { return encode(0, 1, 0); }

    /// Element (v0*e1 + v1*e2, s^g).
    int encode(int v0, int v1, int g) const;
    /// The cocycle psi(s^g, s^h) as (coefficient of e1, coefficient of e2).
    static std::pair<int, int> psi(int g, int h);

    /// The universal quadratic map C3 -> model, g |-> (0, g).
    MapTable universal_map(const FiniteGroup& c3) const;

  private:
    FiniteGroup group_;
    int a_ = 0, b_ = 0;
};

/// Brute-force isomorphism test for small groups (|G| = |H| <= 100).
bool is_isomorphic_small(const FiniteGroup& g, const FiniteGroup& h,
                         std::uint64_t guard = 50'000'000);

/// The battery of target groups used by the classification cross-checks.
struct BatteryEntry {
    const char* name;
    FiniteGroup group;
};
std::vector<BatteryEntry> classification_battery();

}  // namespace polcert::polymap

#endif
