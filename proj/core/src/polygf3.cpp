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

#include "polcert/polygf3.hpp"

#include <algorithm>
#include <sstream>

#include "polcert/error.hpp"

namespace polcert::fields {

PolyGF3 PolyGF3::constant(GF3 v) {
    PolyGF3 p;
    if (!v.is_zero()) p.c_.push_back(v);
    return p;
}

PolyGF3 PolyGF3::monomial(GF3 c, int k) {
    require(k >= 0, "PolyGF3::monomial: negative exponent");
    PolyGF3 p;
    if (!c.is_zero()) {
        p.c_.assign(static_cast<size_t>(k) + 1, GF3::zero());
        p.c_[k] = c;
    }
    return p;
}

int PolyGF3::trailing_degree() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

PolyGF3 operator+(const PolyGF3& a, const PolyGF3& b) {
    std::vector<GF3> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        GF3 x = i < a.c_.size() ? a.c_[i] : GF3::zero();
        GF3 y = i < b.c_.size() ? b.c_[i] : GF3::zero();
        c[i] = x + y;
    }
    return PolyGF3(std::move(c));
}

PolyGF3 operator-(const PolyGF3& a, const PolyGF3& b) { return a + (-b); }

PolyGF3 operator-(const PolyGF3& a) {
    std::vector<GF3> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
    return PolyGF3(std::move(c));
}

PolyGF3 operator*(const PolyGF3& a, const PolyGF3& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GF3> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyGF3(std::move(c));
}

PolyGF3 PolyGF3::scaled(GF3 s) const {
    std::vector<GF3> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = c_[i] * s;
    return PolyGF3(std::move(c));
}

PolyGF3 PolyGF3::monic() const {
    if (is_zero()) return {};
    return scaled(leading().inverse());
}

PolyGF3 PolyGF3::shifted(int k) const {
    require(k >= 0, "PolyGF3::shifted: negative shift");
    if (is_zero()) return {};
    std::vector<GF3> c(c_.size() + static_cast<size_t>(k));
    std::copy(c_.begin(), c_.end(), c.begin() + k);
    return PolyGF3(std::move(c));
}

PolyGF3 PolyGF3::unshifted(int k) const {
    if (is_zero()) return {};
    require(trailing_degree() >= k, "PolyGF3::unshifted: not divisible by x^k");
    return PolyGF3(std::vector<GF3>(c_.begin() + k, c_.end()));
}

std::pair<PolyGF3, PolyGF3> PolyGF3::divmod(const PolyGF3& a, const PolyGF3& b) {
    require(!b.is_zero(), "PolyGF3::divmod: division by zero");
    PolyGF3 rem = a;
    std::vector<GF3> q;
    if (a.degree() >= b.degree()) q.assign(a.degree() - b.degree() + 1, GF3::zero());
    GF3 lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        GF3 f = rem.leading() * lead_inv;
        q[shift] = f;
        rem -= b.shifted(shift).scaled(f);
    }
    return {PolyGF3(std::move(q)), rem};
}

PolyGF3 poly_gcd(PolyGF3 a, PolyGF3 b) {
    while (!b.is_zero()) {
        PolyGF3 r = PolyGF3::divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

std::string PolyGF3::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << "+";
        first = false;
        if (k == 0) {
            os << c_[k].value();
        } else {
            if (c_[k].value() != 1) os << c_[k].value() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace polcert::fields
