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

#ifndef POLCERT_PRESENTATION_HPP
#define POLCERT_PRESENTATION_HPP

#include <string>
#include <vector>

#include "polcert/word.hpp"

namespace polcert::fpgroup {

/// Finite presentation; relators are freely and cyclically reduced.
struct Presentation {
    int generator_count = 0;
    std::vector<std::string> names;   // one per generator
    std::vector<Word> relators;

    Presentation() = default;
    Presentation(std::vector<std::string> generator_names, std::vector<Word> rels);

    std::string to_string() const;
};

/// Parse a word in the `gens: a b` alphabet, e.g. "(b*a)^3" or
/// "[b*a, a*b^-1*a]" ([x,y] = x y x^-1 y^-1). Multiplication is '*',
/// exponents are integers after '^'.
Word parse_word(const std::string& text, const std::vector<std::string>& names);

/// Parse the two-line presentation format:
///   gens: a b
///   rels: (b*a)^3, (a*b^-1*a)^3, [b*a, a*b^-1*a]
Presentation parse_presentation(const std::string& text);

/// <a,b | (ba)^3, (ab^-1a)^3, [ba, ab^-1a]>, the group receiving the
/// universal unital cubic map from C3.
Presentation gamma_presentation();

/// <a,b | a^9, b^9, bab^-1a^-4, aba^-1b^-4>, the order-27 group receiving
/// the universal unital quadratic map from C3.
Presentation pol2_presentation();

}  // namespace polcert::fpgroup

#endif
