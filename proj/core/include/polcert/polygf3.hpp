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

#ifndef POLCERT_POLYGF3_HPP
#define POLCERT_POLYGF3_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "polcert/gf3.hpp"

namespace polcert::fields {

/// Polynomial over F3 in one variable; coefficient index = exponent,
/// trailing zeros stripped, zero polynomial = empty sequence.
class PolyGF3 {
  public:
    PolyGF3() = default;
    explicit PolyGF3(std::vector<GF3> coeffs) : c_(std::move(coeffs)) { trim(); }
    PolyGF3(std::initializer_list<int> coeffs) {
        for (int v : coeffs) c_.push_back(GF3(v));
        trim();
    }
    static PolyGF3 zero() { return {}; }
    static PolyGF3 one() { return constant(GF3::one()); }
    static PolyGF3 constant(GF3 v);
    /// c * x^k.
    static PolyGF3 monomial(GF3 c, int k);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Lowest exponent with nonzero coefficient; -1 for zero.
    int trailing_degree() const;
    GF3 coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : GF3::zero();
    }
    GF3 leading() const { return is_zero() ? GF3::zero() : c_.back(); }
    GF3 constant_term() const { return coeff(0); }
    bool is_monic() const { return !is_zero() && leading() == GF3::one(); }
    const std::vector<GF3>& coeffs() const { return c_; }

    friend PolyGF3 operator+(const PolyGF3& a, const PolyGF3& b);
    friend PolyGF3 operator-(const PolyGF3& a, const PolyGF3& b);
    friend PolyGF3 operator-(const PolyGF3& a);
    friend PolyGF3 operator*(const PolyGF3& a, const PolyGF3& b);
    PolyGF3& operator+=(const PolyGF3& b) { return *this = *this + b; }
    PolyGF3& operator-=(const PolyGF3& b) { return *this = *this - b; }
    PolyGF3& operator*=(const PolyGF3& b) { return *this = *this * b; }

    PolyGF3 scaled(GF3 s) const;
    PolyGF3 monic() const;
    /// Multiply by x^k (k >= 0).
    PolyGF3 shifted(int k) const;
    /// Exact division by x^k; requires trailing_degree() >= k.
    PolyGF3 unshifted(int k) const;

    /// Quotient and remainder with deg(rem) < deg(b); b nonzero.
    static std::pair<PolyGF3, PolyGF3> divmod(const PolyGF3& a, const PolyGF3& b);

    friend bool operator==(const PolyGF3& a, const PolyGF3& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyGF3& a, const PolyGF3& b) { return !(a == b); }

    /// Rendered in the given variable name, e.g. "2*t^2+1".
    std::string to_string(const std::string& var = "t") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<GF3> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
PolyGF3 poly_gcd(PolyGF3 a, PolyGF3 b);

}  // namespace polcert::fields

#endif
