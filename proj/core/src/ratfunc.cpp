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

#include "polcert/ratfunc.hpp"

#include "polcert/error.hpp"

namespace polcert::fields {

RatFuncGF3::RatFuncGF3(PolyGF3 num, PolyGF3 den) : num_(std::move(num)), den_(std::move(den)) {
    require(!den_.is_zero(), "RatFuncGF3: zero denominator");
    if (num_.is_zero()) {
        den_ = PolyGF3::one();
        return;
    }
    PolyGF3 g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = PolyGF3::divmod(num_, g).first;
        den_ = PolyGF3::divmod(den_, g).first;
    }
    GF3 lead = den_.leading();
    if (lead != GF3::one()) {
        GF3 inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFuncGF3 RatFuncGF3::t(int power) {
    if (power >= 0) return RatFuncGF3(PolyGF3::monomial(GF3::one(), power));
    return RatFuncGF3(PolyGF3::one(), PolyGF3::monomial(GF3::one(), -power));
}

RatFuncGF3 operator+(const RatFuncGF3& a, const RatFuncGF3& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFuncGF3 operator-(const RatFuncGF3& a, const RatFuncGF3& b) { return a + (-b); }

RatFuncGF3 operator-(const RatFuncGF3& a) {
    RatFuncGF3 r = a;
    r.num_ = -r.num_;
    return r;
}

RatFuncGF3 operator*(const RatFuncGF3& a, const RatFuncGF3& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RatFuncGF3 RatFuncGF3::inverse() const {
    require(!is_zero(), "RatFuncGF3: division by zero");
    return {den_, num_};
}

namespace {

bool exponents_in_u(const PolyGF3& p) {
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coeff(k).is_zero() && k % 3 != 0) return false;
    return true;
}

}  // namespace

bool RatFuncGF3::is_in_u() const { return exponents_in_u(num_) && exponents_in_u(den_); }

PolyGF3 RatFuncGF3::as_u_polynomial() const {
    require(is_polynomial(), "as_u_polynomial: not a polynomial");
    require(exponents_in_u(num_), "as_u_polynomial: not in F3[u]");
    std::vector<GF3> c;
    for (int k = 0; k <= num_.degree(); k += 3) c.push_back(num_.coeff(k));
    return PolyGF3(std::move(c));
}

std::pair<Valuation, GF3> u_valuation_and_residue(const RatFuncGF3& x) {
    if (x.is_zero()) return {Valuation::infinite(), GF3::zero()};
    require(x.is_in_u(), "not in F3(u): a reduced exponent is not divisible by 3");
    int tn = x.num().trailing_degree();
    int td = x.den().trailing_degree();
    long val = (tn - td) / 3;
    require(td == 0, "u residue: not u-integral (denominator divisible by t)");
    GF3 res = val > 0 ? GF3::zero()
                      : x.num().constant_term() / x.den().constant_term();
    return {Valuation::finite(val), res};
}

std::string RatFuncGF3::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace polcert::fields
