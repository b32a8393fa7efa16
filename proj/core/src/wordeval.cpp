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

#include "polcert/wordeval.hpp"

namespace polcert::matrep {

using fields::Eisen;

using fields::RatFuncGF3;
using fields::TowerElement;

namespace {

Eisen ei(long c0, long c1) { return Eisen(Rat(c0), Rat(c1)); }
Eisen ei3(long c0, long c1) { return Eisen(Rat(c0, 3), Rat(c1, 3)); }  // (c0 + c1 w)/3

}  // namespace

WordEvaluator<TowerElement> pi_generators() {
    auto r2 = [](const Eisen& c) { return TowerElement::r_power(c, 2); };
    auto r1 = [](const Eisen& c) { return TowerElement::r_power(c, 1); };

    Mat3<TowerElement> a;
    a.at(0, 0) = r2(ei(0, 1));        // w r^2
    a.at(0, 1) = r2(ei3(-1, -2));     // (-2w-1)/3 r^2
    a.at(0, 2) = r2(ei3(-2, -1));     // (-w-2)/3 r^2
    a.at(1, 0) = r2(ei(-1, 0));       // -r^2
    a.at(1, 1) = r2(ei(0, -1));       // -w r^2
    a.at(1, 2) = r2(ei3(-1, -2));     // (-2w-1)/3 r^2
    a.at(2, 0) = r2(ei(-1, -1));      // -(w+1) r^2
    a.at(2, 1) = r2(ei(1, 0));        // r^2
    a.at(2, 2) = r2(ei(1, 0));        // r^2

    Mat3<TowerElement> b;
    b.at(0, 0) = TowerElement::zero();
    b.at(0, 1) = TowerElement::zero();
    b.at(0, 2) = r1(ei3(2, 1));       // (w+2)/3 r
    b.at(1, 0) = r1(ei(1, 0));        // r
    b.at(1, 1) = TowerElement::zero();
    b.at(1, 2) = r1(ei(1, 1));        // (w+1) r
    b.at(2, 0) = TowerElement::zero();
    b.at(2, 1) = r1(ei(1, 0));        // r
    b.at(2, 2) = r1(ei(0, 1));        // w r

    // Transcription self-check: pure r-degrees 2 and 1 entrywise.
    for (int k = 0; k < 9; ++k) {
        if (!a.e[k].is_zero()) {
            auto pure = a.e[k].pure_r_component();
            require(pure && pure->first == 2, "pi: a-image entry is not Eisen * r^2");
        }
        if (!b.e[k].is_zero()) {
            auto pure = b.e[k].pure_r_component();
            require(pure && pure->first == 1, "pi: b-image entry is not Eisen * r");
        }
    }
    return WordEvaluator<TowerElement>(a, b, /*projective=*/true);
}

WordEvaluator<RatFuncGF3> rho_generators() {
    auto t = [](int pow) { return RatFuncGF3::t(pow); };
    auto c = [](int v) { return RatFuncGF3(v); };

    Mat3<RatFuncGF3> a;
    a.at(0, 0) = c(0);
    a.at(0, 1) = c(0);
    a.at(0, 2) = t(-1);                 // 1/t
    a.at(1, 0) = c(2) * t(-1);          // 2/t
    a.at(1, 1) = c(0);
    a.at(1, 2) = c(0);
    a.at(2, 0) = c(2) * t(2);           // 2t^2
    a.at(2, 1) = c(2) * t(2);           // 2t^2
    a.at(2, 2) = c(0);

    Mat3<RatFuncGF3> b;
    b.at(0, 0) = c(0);
    b.at(0, 1) = c(2) * t(1);           // 2t
    b.at(0, 2) = c(0);
    b.at(1, 0) = c(0);
    b.at(1, 1) = c(0);
    b.at(1, 2) = c(2) * t(-2);          // 2/t^2
    b.at(2, 0) = t(1);                  // t
    b.at(2, 1) = c(0);
    b.at(2, 2) = t(1);                  // t

    require(a.det() == RatFuncGF3::one(), "rho: det of a-image is not 1");
    require(b.det() == RatFuncGF3::one(), "rho: det of b-image is not 1");
    return WordEvaluator<RatFuncGF3>(a, b, /*projective=*/false);
}

long long graded_degree(const fpgroup::Word& w) {
    long long d = 0;
    for (std::int32_t l : w.letters()) {
        switch (l) {
            case 1: d += 2; break;
            case -1: d -= 2; break;
            case 2: d += 1; break;
            case -2: d -= 1; break;
            default: fail("graded_degree: only two generators");
        }
    }
    return d;
}

int mu_image(const fpgroup::Word& w) {
    long long s = w.exponent_sum(0) + 2 * w.exponent_sum(1);
    return static_cast<int>(((s % 3) + 3) % 3);
}

}  // namespace polcert::matrep
