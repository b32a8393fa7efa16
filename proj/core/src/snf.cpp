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

#include "polcert/snf.hpp"

#include <cstdlib>

namespace polcert::fpgroup {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

std::vector<BigInt> smith_normal_form(IntMatrix m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t k = std::min(rows, cols);
    std::vector<BigInt> diag(k, 0);

    for (size_t s = 0; s < k; ++s) {
        for (;;) {
            // Locate a minimal nonzero |entry| in the trailing block.
            size_t pr = s, pc = s;
            BigInt best = 0;
            for (size_t i = s; i < rows; ++i)
                for (size_t j = s; j < cols; ++j)
                    if (m[i][j] != 0 && (best == 0 || abs_big(m[i][j]) < best)) {
                        best = abs_big(m[i][j]);
                        pr = i;
                        pc = j;
                    }
            if (best == 0) return diag;  // trailing block vanished: remaining diag = 0
            std::swap(m[s], m[pr]);
            for (size_t i = s; i < rows; ++i) std::swap(m[i][s], m[i][pc]);

            bool clean = true;
            for (size_t i = s + 1; i < rows; ++i) {
                if (m[i][s] == 0) continue;
                BigInt q = m[i][s] / m[s][s];
                for (size_t j = s; j < cols; ++j) m[i][j] -= q * m[s][j];
                if (m[i][s] != 0) clean = false;
            }
            for (size_t j = s + 1; j < cols; ++j) {
                if (m[s][j] == 0) continue;
                BigInt q = m[s][j] / m[s][s];
                for (size_t i = s; i < rows; ++i) m[i][j] -= q * m[i][s];
                if (m[s][j] != 0) clean = false;
            }
            if (!clean) continue;  // remainders became new smaller pivot candidates

            // Pivot divides every entry of the trailing block? If not, fold the
            // offending row in and reduce again.
            bool divides = true;
            for (size_t i = s + 1; i < rows && divides; ++i)
                for (size_t j = s + 1; j < cols && divides; ++j)
                    if (m[i][j] % m[s][s] != 0) {
                        for (size_t jj = s; jj < cols; ++jj) m[s][jj] += m[i][jj];
                        divides = false;
                    }
            if (divides) break;
        }
        if (m[s][s] < 0)
            for (size_t j = s; j < cols; ++j) m[s][j] = -m[s][j];
        diag[s] = m[s][s];
    }
    return diag;
}

IntMatrix relator_exponent_matrix(const Presentation& p) {
    IntMatrix m;
    for (const Word& r : p.relators) {
        std::vector<BigInt> row(p.generator_count);
        for (int g = 0; g < p.generator_count; ++g) row[g] = r.exponent_sum(g);
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<BigInt> abelianization(const Presentation& p) {
    IntMatrix m = relator_exponent_matrix(p);
    if (m.empty()) return std::vector<BigInt>(p.generator_count, 0);
    std::vector<BigInt> diag = smith_normal_form(std::move(m));
    std::vector<BigInt> factors;
    size_t nonzero = 0;
    for (const BigInt& d : diag) {
        if (d == 0) continue;
        ++nonzero;
        if (d != 1) factors.push_back(d);
    }
    size_t free_rank = static_cast<size_t>(p.generator_count) - nonzero;
    for (size_t i = 0; i < free_rank; ++i) factors.push_back(0);
    return factors;
}

}  // namespace polcert::fpgroup
