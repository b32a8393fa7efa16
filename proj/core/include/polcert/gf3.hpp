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

#ifndef POLCERT_GF3_HPP
#define POLCERT_GF3_HPP

#include <cstdint>
#include <string>

#include "polcert/error.hpp"

namespace polcert::fields {

/// The field with three elements, stored as 0, 1, 2.
class GF3 {
  public:
    constexpr GF3() = default;
    constexpr explicit GF3(long v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

    static constexpr GF3 zero() { return GF3(0); }
    static constexpr GF3 one() { return GF3(1); }

    constexpr int value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr GF3 operator+(GF3 a, GF3 b) { return GF3(a.v_ + b.v_); }
    friend constexpr GF3 operator-(GF3 a, GF3 b) { return GF3(a.v_ + 3 - b.v_); }
    friend constexpr GF3 operator*(GF3 a, GF3 b) { return GF3(a.v_ * b.v_); }
    friend constexpr GF3 operator-(GF3 a) { return GF3(3 - a.v_); }
    GF3& operator+=(GF3 b) { return *this = *this + b; }
    GF3& operator-=(GF3 b) { return *this = *this - b; }
    GF3& operator*=(GF3 b) { return *this = *this * b; }

    GF3 inverse() const {
        require(v_ != 0, "GF3: inverse of zero");
        return *this;  // 1*1 = 2*2 = 1
    }
    friend GF3 operator/(GF3 a, GF3 b) { return a * b.inverse(); }

    friend constexpr bool operator==(GF3 a, GF3 b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(GF3 a, GF3 b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(GF3 a, GF3 b) { return a.v_ < b.v_; }

    std::string to_string() const { return std::string(1, static_cast<char>('0' + v_)); }

  private:
    std::uint8_t v_ = 0;
};

}  // namespace polcert::fields

#endif
