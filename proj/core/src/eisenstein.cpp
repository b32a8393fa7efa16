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

#include "polcert/eisenstein.hpp"

#include <sstream>

namespace polcert::fields {

namespace {

// lambda-adic valuation of A + B*omega with integer entries, not both zero.
// One division step: (A + B w)/lambda = ((2A - B) + (A + B) w)/3.
long lambda_val_int(BigInt a, BigInt b) {
    long v = 0;
    for (;;) {
        if ((a + b) % 3 != 0) return v;  // residue (A + B) mod 3 nonzero
        BigInt na = (2 * a - b) / 3;
        BigInt nb = (a + b) / 3;
        a = na;
        b = nb;
        ++v;
    }
}

// x = (A + B*omega)/d with d > 0 integral and gcd-free is not required.
struct Split {
    BigInt a, b, d;
};

Split split(const Eisen& x) {
    BigInt d = lcm(den(x.c0()), den(x.c1()));
    BigInt a = num(x.c0()) * (d / den(x.c0()));
    BigInt b = num(x.c1()) * (d / den(x.c1()));
    return {a, b, d};
}

}  // namespace

Valuation lambda_valuation(const Eisen& x) {
    if (x.is_zero()) return Valuation::infinite();
    Split s = split(x);
    return Valuation::finite(lambda_val_int(s.a, s.b) - 2 * p_adic_valuation(s.d, 3));
}

GF3 residue_lambda(const Eisen& x) {
    if (x.is_zero()) return GF3::zero();
    Split s = split(x);
    // Strip the powers of 3 from the denominator: 3 = -omega^2 * lambda^2 and
    // (-omega^2)^-1 = -omega, so z / 3^j = z * (-omega)^j / lambda^(2j).
    long j = p_adic_valuation(s.d, 3);
    BigInt dprime = s.d;
    for (long i = 0; i < j; ++i) dprime /= 3;
    BigInt a = s.a, b = s.b;
    for (long i = 0; i < j; ++i) {
        // multiply by -omega: (a + b w)(-w) = b + (b - a) w  [w^2 = -w-1]
        BigInt na = b, nb = b - a;
        a = na;
        b = nb;
    }
    for (long i = 0; i < 2 * j; ++i) {
        require((a + b) % 3 == 0, "residue_lambda: not lambda-integral");
        BigInt na = (2 * a - b) / 3;
        BigInt nb = (a + b) / 3;
        a = na;
        b = nb;
    }
    // Now x = (a + b w)/dprime with gcd(dprime, 3) = 1; residue = (a+b)/dprime mod 3.
    int r = static_cast<int>(((a + b) % 3 + 3) % 3);
    int dm = static_cast<int>((dprime % 3 + 3) % 3);
    return GF3(r) * GF3(dm).inverse();  // inv(1)=1, inv(2)=2
}

Eisen divide_lambda_power(const Eisen& x, long k) {
    require(x.is_integral(), "divide_lambda_power: non-integral input");
    if (x.is_zero()) return x;
    BigInt a = num(x.c0()), b = num(x.c1());
    for (long i = 0; i < k; ++i) {
        require((a + b) % 3 == 0, "divide_lambda_power: valuation too small");
        BigInt na = (2 * a - b) / 3;
        BigInt nb = (a + b) / 3;
        a = na;
        b = nb;
    }
    return {Rat(a), Rat(b)};
}

Eisen eisen_gcd(Eisen a, Eisen b) {
    require(a.is_integral() && b.is_integral(), "eisen_gcd: non-integral input");
    // Norm-Euclidean descent with nearest-integer rounding of the quotient.
    while (!b.is_zero()) {
        Eisen q = a * b.inverse();
        Eisen qr(Rat(round_nearest(q.c0())), Rat(round_nearest(q.c1())));
        Eisen r = a - qr * b;
        a = b;
        b = r;
    }
    return a;
}

const std::vector<Eisen>& eisen_units() {
    static const std::vector<Eisen> units = [] {
        Eisen w = Eisen::omega();
        Eisen w2 = w * w;
        return std::vector<Eisen>{Eisen::one(), -Eisen::one(), w, -w, w2, -w2};
    }();
    return units;
}

bool is_unit(const Eisen& x) { return x.is_integral() && x.norm() == 1; }

std::string Eisen::to_string() const {
    std::ostringstream os;
    if (is_zero()) return "0";
    bool lead = true;
    if (c0_ != 0) {
        os << c0_;
        lead = false;
    }
    if (c1_ != 0) {
        if (!lead && c1_ > 0) os << "+";
        if (c1_ == -1)
            os << "-";
        else if (c1_ != 1)
            os << c1_ << "*";
        os << "w";
    }
    return os.str();
}

}  // namespace polcert::fields
