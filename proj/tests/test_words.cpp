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

#include <random>

#include "polcert/presentation.hpp"
#include "polcert/word.hpp"

using namespace polcert;
using namespace polcert::fpgroup;

namespace {

const std::vector<std::string> kAB = {"a", "b"};

Word random_word(std::mt19937& rng, int len) {
    std::uniform_int_distribution<int> d(0, 3);
    std::vector<std::int32_t> letters;
    for (int i = 0; i < len; ++i) {
        int v = d(rng);
        letters.push_back(v < 2 ? v + 1 : -(v - 1));
    }
    return Word::from_letters(letters);
}

}  // namespace

TEST_SUITE_BEGIN("words");

TEST_CASE("free reduction") {
    Word a = Word::gen(0), b = Word::gen(1);
    CHECK((a * a.inverse()).empty());
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK(Word::from_letters({1, -2, 2, -1}).empty());
    CHECK(Word::from_letters({1, 2, -2, 2}) == a * b);
}

TEST_CASE("commutator of ba and ab^-1a is the third relator") {
    Word ba = parse_word("b*a", kAB);
    Word aba = parse_word("a*b^-1*a", kAB);
    Presentation gamma = gamma_presentation();
    CHECK(commutator(ba, aba).cyclically_reduced() == gamma.relators[2]);
}

TEST_CASE("powers by repeated squaring") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Word w = random_word(rng, 6);
        Word p = Word::identity();
        for (int k = 0; k < 7; ++k) {
            CHECK(w.pow(k) == p);
            CHECK(w.pow(-k) == p.inverse());
            p = p * w;
        }
    }
}

TEST_CASE("cyclic reduction") {
    Word w = parse_word("a^-1*b*a", kAB);
    CHECK(w.cyclically_reduced() == Word::gen(1));
    CHECK(parse_word("b*a*b^-1", kAB).cyclically_reduced() == Word::gen(0));
}

TEST_CASE("shortlex order ranks a < a^-1 < b < b^-1") {
    Word a = Word::gen(0), ai = Word::gen(0, true), b = Word::gen(1);
    CHECK(a < ai);
    CHECK(ai < b);
    CHECK(a < a * a);            // shorter first
    CHECK(a * a < a * b);
}

TEST_CASE("substitution") {
    Word x = parse_word("a*b^-1", kAB);
    std::vector<Word> images = {parse_word("b*a", kAB), parse_word("a^-1", kAB)};
    CHECK(x.substituted(images) == parse_word("b*a*a", kAB));
}

TEST_CASE("exponent sums") {
    Word w = parse_word("a*b^-2*a^3", kAB);
    CHECK(w.exponent_sum(0) == 4);
    CHECK(w.exponent_sum(1) == -2);
}

TEST_CASE("parser handles nesting, powers, commutators") {
    CHECK(parse_word("(b*a)^3", kAB) == parse_word("b*a*b*a*b*a", kAB));
    CHECK(parse_word("[b*a, a*b^-1*a]", kAB) ==
          commutator(parse_word("b*a", kAB), parse_word("a*b^-1*a", kAB)));
    CHECK(parse_word("a^-4", kAB) == Word::gen(0).pow(-4));
    CHECK(parse_word("1", kAB).empty());
    CHECK_THROWS_AS(parse_word("c", kAB), Error);
    CHECK_THROWS_AS(parse_word("a*", kAB), Error);
    CHECK_THROWS_AS(parse_word("a b", kAB), Error);
}

TEST_CASE("presentation round trip") {
    Presentation gamma = gamma_presentation();
    CHECK(gamma.generator_count == 2);
    CHECK(gamma.relators.size() == 3);
    Presentation reparsed = parse_presentation(gamma.to_string());
    CHECK(reparsed.relators == gamma.relators);
    CHECK(reparsed.names == gamma.names);
}

TEST_CASE("word rendering uses power notation") {
    CHECK(parse_word("a*a*a*b^-1", kAB).to_string(kAB) == "a^3*b^-1");
    CHECK(Word::identity().to_string(kAB) == "1");
}

TEST_SUITE_END();
