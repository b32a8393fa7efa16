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

#ifndef POLCERT_SCHREIER_HPP
#define POLCERT_SCHREIER_HPP

#include <vector>

#include "polcert/finite_group.hpp"
#include "polcert/word.hpp"

namespace polcert::fpgroup {

/// Homomorphism from a free group onto (a subgroup of) a finite group,
/// given by generator images.
struct FiniteImage {
    const polymap::FiniteGroup* target = nullptr;
    std::vector<int> images;  // image of free generator k

    int image_of(const Word& w) const;
};

struct SubgroupData {
    std::vector<Word> transversal;           // coset representatives, empty word first
    std::vector<Word> schreier_generators;   // freely reduced, nontrivial
};

/// Schreier generators of the kernel of a map onto a finite group. The
/// transversal consists of the shortlex-minimal representatives (letter
/// order g1 < g1^-1 < g2 < g2^-1 < ...); generators are t*g*rep(t*g)^-1 for
/// transversal t and positive generator g, with the trivial ones discarded.
/// Requires the images to generate the target group.
SubgroupData reidemeister_schreier(int generator_count, const FiniteImage& image);

}  // namespace polcert::fpgroup

#endif
