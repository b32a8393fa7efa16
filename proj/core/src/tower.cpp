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

#include "polcert/tower.hpp"

#include <array>
#include <sstream>

namespace polcert::fields {

TowerElement TowerElement::r_power(const Eisen& c, int k) {
    require(k >= 0 && k <= 2, "r_power: exponent out of range");
    TowerElement x;
    switch (k) {
        case 0: x.e0_ = c; break;
        case 1: x.e1_ = c; break;
        default: x.e2_ = c; break;
    }
    return x;
}

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
    const Eisen lam = Eisen::lambda();  // r^3 = 1 - omega
    Eisen z0 = a.e0_ * b.e0_ + lam * (a.e1_ * b.e2_ + a.e2_ * b.e1_);
    Eisen z1 = a.e0_ * b.e1_ + a.e1_ * b.e0_ + lam * (a.e2_ * b.e2_);
    Eisen z2 = a.e0_ * b.e2_ + a.e1_ * b.e1_ + a.e2_ * b.e0_;
    return {z0, z1, z2};
}

TowerElement TowerElement::inverse() const {
    require(!is_zero(), "TowerElement: division by zero");
    // Solve (this * x) = 1 for x, a 3x3 linear system over Q(omega):
    // columns are this * r^k for k = 0, 1, 2.
    std::array<std::array<Eisen, 4>, 3> m;
    const Eisen lam = Eisen::lambda();
    // this * 1 = (e0, e1, e2)
    m[0][0] = e0_; m[1][0] = e1_; m[2][0] = e2_;
    // this * r = (lam*e2, e0, e1)
    m[0][1] = lam * e2_; m[1][1] = e0_; m[2][1] = e1_;
    // this * r^2 = (lam*e1, lam*e2, e0)
    m[0][2] = lam * e1_; m[1][2] = lam * e2_; m[2][2] = e0_;
    m[0][3] = Eisen::one(); m[1][3] = Eisen::zero(); m[2][3] = Eisen::zero();

    // Gaussian elimination.
    for (int col = 0; col < 3; ++col) {
        int piv = -1;
        for (int row = col; row < 3; ++row)
            if (!m[row][col].is_zero()) {
                piv = row;
                break;
            }
        require(piv >= 0, "TowerElement: singular multiplication matrix");
        std::swap(m[col], m[piv]);
        Eisen inv = m[col][col].inverse();
        for (int j = col; j < 4; ++j) m[col][j] = m[col][j] * inv;
        for (int row = 0; row < 3; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Eisen f = m[row][col];
            for (int j = col; j < 4; ++j) m[row][j] = m[row][j] - f * m[col][j];
        }
    }
    return {m[0][3], m[1][3], m[2][3]};
}

std::optional<std::pair<int, Eisen>> TowerElement::pure_r_component() const {
    int idx = -1;
    const Eisen* coeffs[3] = {&e0_, &e1_, &e2_};
    for (int k = 0; k < 3; ++k) {
        if (coeffs[k]->is_zero()) continue;
        if (idx >= 0) return std::nullopt;  // two nonzero coordinates
        idx = k;
    }
    if (idx < 0) return std::nullopt;  // zero element
    return std::make_pair(idx, *coeffs[idx]);
}

std::string TowerElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const Eisen* coeffs[3] = {&e0_, &e1_, &e2_};
    const char* pow[3] = {"", "r", "r^2"};
    for (int k = 0; k < 3; ++k) {
        if (coeffs[k]->is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0)
            os << coeffs[k]->to_string();
        else
            os << "(" << coeffs[k]->to_string() << ")*" << pow[k];
    }
    return os.str();
}

}  // namespace polcert::fields
