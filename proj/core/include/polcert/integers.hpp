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

#ifndef POLCERT_INTEGERS_HPP
#define POLCERT_INTEGERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "polcert/error.hpp"

namespace polcert {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we need everywhere: gcd(num, den) = 1, den > 0.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline BigInt den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

/// Exponent of the largest power of p dividing n (n != 0).
inline long p_adic_valuation(BigInt n, const BigInt& p) {
    require(n != 0, "p_adic_valuation: zero argument");
    if (n < 0) n = -n;
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

/// Nearest integer to a rational (ties rounded towards +infinity).
inline BigInt round_nearest(const Rat& x) {
    // floor((2*num + den) / (2*den))
    BigInt n = 2 * num(x) + den(x);
    BigInt d = 2 * den(x);
    BigInt q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

/// base^exp mod m for non-negative exp, m >= 1.
inline BigInt mod_pow(BigInt base, BigInt exp, const BigInt& m) {
    require(exp >= 0 && m >= 1, "mod_pow: bad arguments");
    base %= m;
    if (base < 0) base += m;
    BigInt acc = 1 % m;
    while (exp > 0) {
        if (exp % 2 == 1) acc = acc * base % m;
        base = base * base % m;
        exp /= 2;
    }
    return acc;
}

}  // namespace polcert

#endif
