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

#ifndef POLCERT_TOWER_HPP
#define POLCERT_TOWER_HPP

#include <optional>
#include <string>
#include <utility>

#include "polcert/eisenstein.hpp"

namespace polcert::fields {

/// Element of the degree-6 tower E = Q(omega)[r]/(r^3 - (1 - omega)),
/// stored as e0 + e1*r + e2*r^2 with Eisen coordinates. E is kept as a
/// degree-3 extension of Q(omega) rather than flattened over Q; inversion
/// solves a 3x3 linear system over Q(omega).
class TowerElement {
  public:
    TowerElement() = default;
    TowerElement(Eisen e0, Eisen e1, Eisen e2)
        : e0_(std::move(e0)), e1_(std::move(e1)), e2_(std::move(e2)) {}
    explicit TowerElement(const Eisen& e0) : e0_(e0) {}

    static TowerElement zero() { return {}; }
    static TowerElement one() { return TowerElement(Eisen::one()); }
    static TowerElement r() { return {Eisen::zero(), Eisen::one(), Eisen::zero()}; }
    /// c * r^k for k in {0, 1, 2}.
    static TowerElement r_power(const Eisen& c, int k);

    const Eisen& e0() const { return e0_; }
    const Eisen& e1() const { return e1_; }
    const Eisen& e2() const { return e2_; }

    bool is_zero() const { return e0_.is_zero() && e1_.is_zero() && e2_.is_zero(); }

    friend TowerElement operator+(const TowerElement& a, const TowerElement& b) {
        return {a.e0_ + b.e0_, a.e1_ + b.e1_, a.e2_ + b.e2_};
    }
    friend TowerElement operator-(const TowerElement& a, const TowerElement& b) {
        return {a.e0_ - b.e0_, a.e1_ - b.e1_, a.e2_ - b.e2_};
    }
    friend TowerElement operator-(const TowerElement& a) { return {-a.e0_, -a.e1_, -a.e2_}; }
    friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
    TowerElement& operator+=(const TowerElement& b) { return *this = *this + b; }
    TowerElement& operator-=(const TowerElement& b) { return *this = *this - b; }
    TowerElement& operator*=(const TowerElement& b) { return *this = *this * b; }

    TowerElement inverse() const;
    friend TowerElement operator/(const TowerElement& a, const TowerElement& b) {
        return a * b.inverse();
    }

    friend bool operator==(const TowerElement& a, const TowerElement& b) {
        return a.e0_ == b.e0_ && a.e1_ == b.e1_ && a.e2_ == b.e2_;
    }
    friend bool operator!=(const TowerElement& a, const TowerElement& b) { return !(a == b); }

    /// If exactly one coordinate is nonzero, its index k and the Eisen
    /// coefficient (the element is c * r^k). Zero has no pure degree.
    std::optional<std::pair<int, Eisen>> pure_r_component() const;

    std::string to_string() const;

  private:
    Eisen e0_, e1_, e2_;
};

}  // namespace polcert::fields

#endif
