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

#ifndef POLCERT_MAT3_HPP
#define POLCERT_MAT3_HPP

#include <array>
#include <string>

#include "polcert/error.hpp"

namespace polcert::matrep {

/// 3x3 matrix over an exact field scalar F. F must provide zero(), one(),
/// is_zero(), inverse(), +, -, *, ==, and to_string().
template <class F>
struct Mat3 {
    std::array<F, 9> e{};

    static Mat3 zero() { return {}; }
    static Mat3 identity() {
        Mat3 m;
        m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = F::one();
        return m;
    }
    /// identity + x in position (i, j), 0-based, i != j.
    static Mat3 elementary(int i, int j, const F& x) {
        require(i != j && i >= 0 && i < 3 && j >= 0 && j < 3, "elementary: bad position");
        Mat3 m = identity();
        m.at(i, j) = x;
        return m;
    }

    F& at(int i, int j) { return e[static_cast<size_t>(3 * i + j)]; }
    const F& at(int i, int j) const { return e[static_cast<size_t>(3 * i + j)]; }

    friend Mat3 operator*(const Mat3& a, const Mat3& b) {
        Mat3 c;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                F s = a.at(i, 0) * b.at(0, j);
                s += a.at(i, 1) * b.at(1, j);
                s += a.at(i, 2) * b.at(2, j);
                c.at(i, j) = s;
            }
        return c;
    }
    friend Mat3 operator+(const Mat3& a, const Mat3& b) {
        Mat3 c;
        for (int k = 0; k < 9; ++k) c.e[k] = a.e[k] + b.e[k];
        return c;
    }
    friend Mat3 operator-(const Mat3& a, const Mat3& b) {
        Mat3 c;
        for (int k = 0; k < 9; ++k) c.e[k] = a.e[k] - b.e[k];
        return c;
    }
    friend bool operator==(const Mat3& a, const Mat3& b) { return a.e == b.e; }
    friend bool operator!=(const Mat3& a, const Mat3& b) { return !(a == b); }

    Mat3 scaled(const F& s) const {
        Mat3 c;
        for (int k = 0; k < 9; ++k) c.e[k] = e[k] * s;
        return c;
    }

    F det() const {
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }

    Mat3 adjugate() const {
        Mat3 c;
        c.at(0, 0) = at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1);
        c.at(0, 1) = at(0, 2) * at(2, 1) - at(0, 1) * at(2, 2);
        c.at(0, 2) = at(0, 1) * at(1, 2) - at(0, 2) * at(1, 1);
        c.at(1, 0) = at(1, 2) * at(2, 0) - at(1, 0) * at(2, 2);
        c.at(1, 1) = at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0);
        c.at(1, 2) = at(0, 2) * at(1, 0) - at(0, 0) * at(1, 2);
        c.at(2, 0) = at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0);
        c.at(2, 1) = at(0, 1) * at(2, 0) - at(0, 0) * at(2, 1);
        c.at(2, 2) = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        return c;
    }

    Mat3 inverse() const {
        F d = det();
        require(!d.is_zero(), "Mat3: singular matrix");
        return adjugate().scaled(d.inverse());
    }

    Mat3 transpose() const {
        Mat3 c;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) c.at(i, j) = at(j, i);
        return c;
    }

    F trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

    bool is_identity() const { return *this == identity(); }

    /// The scalar c with *this == c * I, if any.
    bool is_scalar(F* out = nullptr) const {
        const F z = F::zero();
        if (!(at(0, 1) == z && at(0, 2) == z && at(1, 0) == z && at(1, 2) == z &&
              at(2, 0) == z && at(2, 1) == z))
            return false;
        if (!(at(0, 0) == at(1, 1) && at(1, 1) == at(2, 2))) return false;
        if (out) *out = at(0, 0);
        return true;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < 3; ++i) {
            s += i ? "; " : "";
            for (int j = 0; j < 3; ++j) s += (j ? ", " : "") + at(i, j).to_string();
        }
        return s + "]";
    }
    /// Canonical key for hashing/deduplication.
    std::string key() const { return to_string(); }
};

/// Projective canonical form: scale so that the first nonzero entry in
/// row-major order is 1. Two projective matrices are equal iff their
/// canonical entries are identical.
template <class F>
struct ProjMat3 {
    Mat3<F> m;

    ProjMat3() : m(Mat3<F>::identity()) {}
    explicit ProjMat3(const Mat3<F>& raw) : m(raw) {
        for (int k = 0; k < 9; ++k)
            if (!raw.e[k].is_zero()) {
                m = raw.scaled(raw.e[k].inverse());
                return;
            }
        fail("ProjMat3: zero matrix");
    }

    friend bool operator==(const ProjMat3& a, const ProjMat3& b) { return a.m == b.m; }
    friend bool operator!=(const ProjMat3& a, const ProjMat3& b) { return !(a == b); }
    bool is_identity() const { return m.is_identity(); }
    std::string key() const { return m.key(); }
};

}  // namespace polcert::matrep

#endif
