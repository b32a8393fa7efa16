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

#ifndef POLCERT_VALUATION_HPP
#define POLCERT_VALUATION_HPP

#include <string>

namespace polcert::fields {

/// Value of a discrete valuation; infinite() encodes v(0) = +infinity.
struct Valuation {
    bool is_infinite = false;
    long v = 0;

    static Valuation infinite() { return {true, 0}; }
    static Valuation finite(long v) { return {false, v}; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.is_infinite == b.is_infinite && (a.is_infinite || a.v == b.v);
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }

    /// a >= b in the extended order (+infinity largest).
    friend bool geq(const Valuation& a, const Valuation& b) {
        if (a.is_infinite) return true;
        if (b.is_infinite) return false;
        return a.v >= b.v;
    }

    std::string to_string() const { return is_infinite ? "+inf" : std::to_string(v); }
};

inline Valuation min(const Valuation& a, const Valuation& b) {
    if (a.is_infinite) return b;
    if (b.is_infinite) return a;
    return Valuation::finite(a.v < b.v ? a.v : b.v);
}

inline Valuation add(const Valuation& a, const Valuation& b) {
    if (a.is_infinite || b.is_infinite) return Valuation::infinite();
    return Valuation::finite(a.v + b.v);
}

}  // namespace polcert::fields

#endif
