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

#ifndef POLCERT_CONGRUENCE_HPP
#define POLCERT_CONGRUENCE_HPP

#include <optional>
#include <vector>

#include "polcert/eisenstein.hpp"
#include "polcert/gf3.hpp"
#include "polcert/integers.hpp"
#include "polcert/mat3.hpp"
#include "polcert/ratfunc.hpp"
#include "polcert/wordeval.hpp"

namespace polcert::matrep {

using Mat3Gf3 = Mat3<fields::GF3>;

/// Dense code of a GF3 matrix (9 trits, < 3^9); used for closures and sets.
int gf3_code(const Mat3Gf3& m);
Mat3Gf3 gf3_decode(int code);

/// Result of normalizing a tower-valued word image into PSL3(Z[omega]):
/// integral Eisenstein entries, content 1, determinant exactly 1, unit
/// multiple chosen canonically.
struct DescendResult {
    Mat3<fields::Eisen> rep;
    long long stripped_r_degree = 0;  // the graded degree d(w) of the input word
};

/// Strips the scalar r^d(w) from an exact product of pi-images (d(w) must be
/// divisible by 3, i.e. the word lies in the index-3 kernel), clears
/// denominators, divides by the Z[omega] content and rescales by a unit so
/// the determinant is 1. Throws "not in the kernel" when d(w) is not
/// divisible by 3 and "not in PSL3(Z[omega])" when the normalized
/// determinant is not a rational unit.
DescendResult descend_and_normalize(const WordEvaluator<fields::TowerElement>& pi,
                                    const fpgroup::Word& w);

/// All entries are polynomials whose reduced t-exponents are divisible by 3,
/// i.e. the matrix lies in SL3(F3[u]).
bool entries_in_u_polynomials(const Mat3<fields::RatFuncGF3>& m);

/// Entrywise residue mod lambda of an integral det-1 matrix, as an element
/// of SL3(F3) (the determinant-1 representative is unique projectively).
Mat3Gf3 reduce_mod_lambda(const Mat3<fields::Eisen>& m);

/// Level-1 logarithm X = (M - I)/lambda mod lambda for integral det-1 M
/// congruent to the identity mod lambda. trace(X) = 0 is verified.
Mat3Gf3 level1_log_lambda(const Mat3<fields::Eisen>& m);

/// Entrywise constant term (u = 0) of a matrix over F3[u]; det 1 verified.
Mat3Gf3 reduce_mod_u(const Mat3<fields::RatFuncGF3>& m);

/// Level-1 logarithm X = (M - I)/u mod u for M in SL3(F3[u]) congruent to
/// the identity mod u. trace(X) = 0 is verified.
Mat3Gf3 level1_log_u(const Mat3<fields::RatFuncGF3>& m);

/// Entrywise truncation mod u^n (entries must be polynomials in u).
Mat3<fields::RatFuncGF3> truncate_mod_u(const Mat3<fields::RatFuncGF3>& m, int n);

/// Multiplicative closure of GF3 matrices (they must be invertible);
/// deterministic element order, guard on the element count.
std::vector<Mat3Gf3> group_closure(const std::vector<Mat3Gf3>& generators,
                                   std::size_t guard = 1'000'000);

/// The 27 upper unitriangular matrices over F3, in code order.
std::vector<Mat3Gf3> standard_unitriangular();

struct ImageComparison {
    std::size_t order = 0;
    bool equals_standard = false;
    /// Conjugator c with c G c^-1 = standard unitriangular set, if one
    /// exists in GL3(F3). Identity when equals_standard.
    std::optional<Mat3Gf3> conjugator;
};

/// Compare the group generated by `images` against the standard
/// unitriangular subgroup, up to conjugation.
ImageComparison compare_with_standard_unitriangular(const std::vector<Mat3Gf3>& images);

/// Subspace of 3x3 matrices over F3, maintained as a canonical reduced
/// echelon basis of 9-vectors (row-major coordinates).
class SubspaceGf3 {
  public:
    void add(const Mat3Gf3& m);
    int dim() const { return static_cast<int>(basis_.size()); }
    bool contains(const Mat3Gf3& m) const;
    SubspaceGf3 joined(const SubspaceGf3& other) const;
    const std::vector<std::array<fields::GF3, 9>>& basis() const { return basis_; }
    friend bool operator==(const SubspaceGf3& a, const SubspaceGf3& b) {
        return a.basis_ == b.basis_;
    }

  private:
    std::vector<std::array<fields::GF3, 9>> basis_;  // reduced echelon, pivot order
};

/// The displayed six-parameter level-1 set in characteristic zero:
/// matrices with zero (1,1) and (3,1) entries and (3,3) = -(2,2).
SubspaceGf3 displayed_level1_set_char0();

/// The scalar line F3 * I.
SubspaceGf3 scalar_line();

/// |SL3(F3)| = |PSL3(F3)| = 5616.
BigInt psl3_f3_order();

/// Index of the intersection subgroup in the full level-0 group given the
/// order of the level-0 image and the level-1 span dimension:
/// (|PSL3(F3)| / level0_order) * 3^(ambient_dim - level1_dim). Assumes full
/// containment at level 2 and deeper.
BigInt index_reconstruction(long level0_order, int level1_dim, int ambient_level1_dim);

}  // namespace polcert::matrep

#endif
