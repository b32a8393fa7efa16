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

#ifndef POLCERT_TODD_COXETER_HPP
#define POLCERT_TODD_COXETER_HPP

#include <vector>

#include "polcert/presentation.hpp"

namespace polcert::fpgroup {

/// Complete standardized coset table of a subgroup in a finitely presented
/// group. Rows are cosets (0 = the subgroup itself), columns alternate
/// generator and inverse: column 2k is generator k, column 2k+1 its inverse.
struct CosetTable {
    int generator_count = 0;
    bool complete = false;           // false = coset limit exceeded (unknown)
    long max_cosets_used = 0;        // for diagnostics
    std::vector<std::vector<long>> rows;

    long index() const { return static_cast<long>(rows.size()); }

    long apply_letter(long coset, std::int32_t letter) const {
        int idx = (letter > 0 ? letter : -letter) - 1;
        return rows[coset][2 * idx + (letter > 0 ? 0 : 1)];
    }
    long apply_word(long coset, const Word& w) const {
        for (std::int32_t l : w.letters()) coset = apply_letter(coset, l);
        return coset;
    }
};

/// HLT coset enumeration with gap filling and standardization. Deterministic
/// for fixed input order. On overflow the returned table has complete=false
/// (the caller must treat that as "unknown", never "infinite").
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_generators,
                        long max_cosets);

/// Exhaustive consistency check of a complete table: inverse edges match,
/// every relator acts trivially on every coset, every subgroup generator
/// fixes coset 0.
bool verify_coset_table(const CosetTable& t, const Presentation& p,
                        const std::vector<Word>& subgroup_generators);

}  // namespace polcert::fpgroup

#endif
