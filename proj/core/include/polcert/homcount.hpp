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

#ifndef POLCERT_HOMCOUNT_HPP
#define POLCERT_HOMCOUNT_HPP

#include <cstdint>
#include <vector>

#include "polcert/finite_group.hpp"
#include "polcert/presentation.hpp"

namespace polcert::fpgroup {

/// All generator-image tuples in H satisfying every relator of p, in
/// lexicographic order. Brute force; throws if |H|^gens exceeds the guard.
std::vector<std::vector<int>> relator_satisfying_tuples(const Presentation& p,
                                                        const polymap::FiniteGroup& h,
                                                        std::uint64_t guard = 10'000'000);

/// |Hom(p, H)| by brute force.
std::uint64_t count_homs(const Presentation& p, const polymap::FiniteGroup& h,
                         std::uint64_t guard = 10'000'000);

}  // namespace polcert::fpgroup

#endif
