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

#ifndef POLCERT_RATFUNC_HPP
#define POLCERT_RATFUNC_HPP

#include <string>
#include <utility>

#include "polcert/polygf3.hpp"
#include "polcert/valuation.hpp"

namespace polcert::fields {

/// Rational function over F3 in the variable t, kept reduced with monic
/// denominator (num = 0 forces den = 1). Equality is structural, which makes
/// values hashable via to_string(). The subfield F3(u) with u = t^3 consists
/// of the values all of whose reduced exponents are divisible by 3.
class RatFuncGF3 {
  public:
    RatFuncGF3() : den_(PolyGF3::one()) {}
    RatFuncGF3(PolyGF3 num, PolyGF3 den);
    explicit RatFuncGF3(PolyGF3 num) : num_(std::move(num)), den_(PolyGF3::one()) {}
    explicit RatFuncGF3(int c) : num_(PolyGF3::constant(GF3(c))), den_(PolyGF3::one()) {}

    static RatFuncGF3 zero() { return RatFuncGF3(); }
    static RatFuncGF3 one() { return RatFuncGF3(1); }
    static RatFuncGF3 t(int power = 1);  // t^power, power may be negative

    const PolyGF3& num() const { return num_; }
    const PolyGF3& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == PolyGF3::one(); }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }

    friend RatFuncGF3 operator+(const RatFuncGF3& a, const RatFuncGF3& b);
    friend RatFuncGF3 operator-(const RatFuncGF3& a, const RatFuncGF3& b);
    friend RatFuncGF3 operator-(const RatFuncGF3& a);
    friend RatFuncGF3 operator*(const RatFuncGF3& a, const RatFuncGF3& b);
    RatFuncGF3& operator+=(const RatFuncGF3& b) { return *this = *this + b; }
    RatFuncGF3& operator-=(const RatFuncGF3& b) { return *this = *this - b; }
    RatFuncGF3& operator*=(const RatFuncGF3& b) { return *this = *this * b; }

    RatFuncGF3 inverse() const;
    friend RatFuncGF3 operator/(const RatFuncGF3& a, const RatFuncGF3& b) {
        return a * b.inverse();
    }

    friend bool operator==(const RatFuncGF3& a, const RatFuncGF3& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFuncGF3& a, const RatFuncGF3& b) { return !(a == b); }

    /// All reduced exponents divisible by 3, i.e. the value lies in F3(u).
    bool is_in_u() const;

    /// The value as a polynomial in u; requires is_polynomial() && is_in_u().
    PolyGF3 as_u_polynomial() const;

    std::string to_string() const;

  private:
    PolyGF3 num_, den_;
};

/// u-adic valuation and residue of x in F3(u), u = t^3. Throws if some
/// reduced exponent is not divisible by 3 ("not in F3(u)"), or when the
/// residue is requested for a non-u-integral value. x = 0 gives (+inf, 0).
std::pair<Valuation, GF3> u_valuation_and_residue(const RatFuncGF3& x);

}  // namespace polcert::fields

#endif
