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

#ifndef POLCERT_EISENSTEIN_HPP
#define POLCERT_EISENSTEIN_HPP

#include <string>
#include <vector>

#include "polcert/gf3.hpp"
#include "polcert/integers.hpp"
#include "polcert/valuation.hpp"

namespace polcert::fields {

/// Element of Q(omega), omega a primitive cube root of unity, stored as
/// c0 + c1*omega with rational coordinates. Arithmetic reduces by
/// omega^2 = -omega - 1. Values with integer coordinates are Eisenstein
/// integers; lambda denotes the ramified prime 1 - omega (3 = -omega^2*lambda^2).
class Eisen {
  public:
    Eisen() = default;
    Eisen(Rat c0, Rat c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}
    explicit Eisen(const Rat& c0) : c0_(c0) {}
    explicit Eisen(long c0) : c0_(c0) {}

    static Eisen zero() { return Eisen(); }
    static Eisen one() { return Eisen(1); }
    static Eisen omega() { return Eisen(Rat(0), Rat(1)); }
    static Eisen lambda() { return Eisen(Rat(1), Rat(-1)); }  // 1 - omega

    const Rat& c0() const { return c0_; }
    const Rat& c1() const { return c1_; }

    bool is_zero() const { return c0_ == 0 && c1_ == 0; }
    bool is_rational() const { return c1_ == 0; }
    bool is_integral() const { return den(c0_) == 1 && den(c1_) == 1; }

    friend Eisen operator+(const Eisen& a, const Eisen& b) {
        return {a.c0_ + b.c0_, a.c1_ + b.c1_};
    }
    friend Eisen operator-(const Eisen& a, const Eisen& b) {
        return {a.c0_ - b.c0_, a.c1_ - b.c1_};
    }
    friend Eisen operator-(const Eisen& a) { return {-a.c0_, -a.c1_}; }
    friend Eisen operator*(const Eisen& a, const Eisen& b) {
        // (a0 + a1 w)(b0 + b1 w), w^2 = -w - 1
        Rat t = a.c1_ * b.c1_;
        return {a.c0_ * b.c0_ - t, a.c0_ * b.c1_ + a.c1_ * b.c0_ - t};
    }
    Eisen& operator+=(const Eisen& b) { return *this = *this + b; }
    Eisen& operator-=(const Eisen& b) { return *this = *this - b; }
    Eisen& operator*=(const Eisen& b) { return *this = *this * b; }

    /// Galois conjugate omega -> omega^2.
    Eisen conj() const { return {c0_ - c1_, -c1_}; }

    /// Field norm x * conj(x) = c0^2 - c0*c1 + c1^2 (a rational).
    Rat norm() const { return c0_ * c0_ - c0_ * c1_ + c1_ * c1_; }

    Eisen inverse() const {
        require(!is_zero(), "Eisen: division by zero");
        Rat n = norm();
        Eisen c = conj();
        return {c.c0_ / n, c.c1_ / n};
    }
    friend Eisen operator/(const Eisen& a, const Eisen& b) { return a * b.inverse(); }

    friend bool operator==(const Eisen& a, const Eisen& b) {
        return a.c0_ == b.c0_ && a.c1_ == b.c1_;
    }
    friend bool operator!=(const Eisen& a, const Eisen& b) { return !(a == b); }

    std::string to_string() const;

  private:
    Rat c0_, c1_;
};

/// lambda-adic valuation on Q(omega); v(lambda) = 1, v(3) = 2, v(0) = +inf.
Valuation lambda_valuation(const Eisen& x);

/// Residue map Z[omega] -> F3 with omega -> 1, extended to all lambda-integral
/// fractions (denominator prime to lambda inverted mod 3). Throws if
/// lambda_valuation(x) < 0.
GF3 residue_lambda(const Eisen& x);

/// Exact quotient x / lambda^k for x with integer coordinates and
/// lambda_valuation >= k. Result has integer coordinates.
Eisen divide_lambda_power(const Eisen& x, long k);

/// Euclidean gcd in Z[omega]; inputs must have integer coordinates.
/// The result is defined up to a unit; gcd(0, 0) = 0.
Eisen eisen_gcd(Eisen a, Eisen b);

/// The six units of Z[omega]: 1, -1, omega, -omega, omega^2, -omega^2.
const std::vector<Eisen>& eisen_units();

bool is_unit(const Eisen& x);

}  // namespace polcert::fields

#endif
