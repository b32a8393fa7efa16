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

#ifndef POLCERT_AUTOMORPHISM_HPP
#define POLCERT_AUTOMORPHISM_HPP

#include <vector>

#include "polcert/congruence.hpp"

namespace polcert::matrep {

struct IntertwinerResult {
    bool intertwiner_exists = false;
    std::vector<int> witness;         // permutation of group elements, when found
    long automorphism_count = 0;      // |Aut| of the common image group
    std::size_t group_order = 0;
};

/// Exhaustive search for a group automorphism alpha of the common image
/// group with alpha(images1[k]) = images2[k] for all k. The two image lists
/// must generate the same subgroup (pass standardized images). All
/// automorphisms are enumerated by brute force over generator-image pairs
/// filtered to homomorphic bijections; the count is recorded.
IntertwinerResult automorphism_intertwiner_search(const std::vector<Mat3Gf3>& images1,
                                                  const std::vector<Mat3Gf3>& images2);

}  // namespace polcert::matrep

#endif
