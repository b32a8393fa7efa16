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

#ifndef POLCERT_SNF_HPP
#define POLCERT_SNF_HPP

#include <vector>

#include "polcert/integers.hpp"
#include "polcert/presentation.hpp"

namespace polcert::fpgroup {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Diagonal of the Smith normal form: non-negative d_1 | d_2 | ... | d_k,
/// k = min(rows, cols). Integer row/column reduction, pivot chosen as a
/// minimal nonzero absolute value.
std::vector<BigInt> smith_normal_form(IntMatrix m);

/// Exponent-sum matrix of the relators (one row per relator).
IntMatrix relator_exponent_matrix(const Presentation& p);

/// Invariant factors of the abelianization: divisor chain d_1 | d_2 | ...
/// with trivial (=1) factors dropped and one 0 per free rank appended.
std::vector<BigInt> abelianization(const Presentation& p);

}  // namespace polcert::fpgroup

#endif
