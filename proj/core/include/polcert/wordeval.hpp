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

#ifndef POLCERT_WORDEVAL_HPP
#define POLCERT_WORDEVAL_HPP

#include <string>
#include <vector>

#include "polcert/mat3.hpp"
#include "polcert/presentation.hpp"
#include "polcert/ratfunc.hpp"
#include "polcert/tower.hpp"
#include "polcert/word.hpp"

namespace polcert::matrep {

/// Images of the two generators a, b as exact 3x3 matrices, with verified
/// cached inverses. mode projective = equality up to scalars.
template <class F>
class WordEvaluator {
  public:
    WordEvaluator(Mat3<F> image_a, Mat3<F> image_b, bool projective)
        : a_(std::move(image_a)), b_(std::move(image_b)), projective_(projective) {
        ia_ = a_.inverse();
        ib_ = b_.inverse();
        require((a_ * ia_).is_identity() && (b_ * ib_).is_identity(),
                "WordEvaluator: inverse verification failed");
    }

    bool projective() const { return projective_; }
    const Mat3<F>& image_a() const { return a_; }
    const Mat3<F>& image_b() const { return b_; }
    const Mat3<F>& image(std::int32_t letter) const {
        switch (letter) {
            case 1: return a_;
            case -1: return ia_;
            case 2: return b_;
            default:
                require(letter == -2, "WordEvaluator: only two generators");
                return ib_;
        }
    }

    Mat3<F> eval(const fpgroup::Word& w) const {
        Mat3<F> m = Mat3<F>::identity();
        for (std::int32_t l : w.letters()) m = m * image(l);
        return m;
    }
    ProjMat3<F> eval_proj(const fpgroup::Word& w) const { return ProjMat3<F>(eval(w)); }

    /// Identity test respecting the mode.
    bool is_trivial(const Mat3<F>& m) const {
        if (!projective_) return m.is_identity();
        F c;
        return m.is_scalar(&c) && !c.is_zero();
    }

  private:
    Mat3<F> a_, b_, ia_, ib_;
    bool projective_;
};

/// The characteristic-zero generator images over the tower field: every
/// entry of the a-image is an Eisen multiple of r^2 and of the b-image an
/// Eisen multiple of r (verified at construction).
WordEvaluator<fields::TowerElement> pi_generators();

/// The characteristic-3 generator images over F3(t); both determinants are
/// verified to be 1 at construction.
WordEvaluator<fields::RatFuncGF3> rho_generators();

/// r-degree grading: a has degree 2, b degree 1 (negated for inverses).
/// d(w) mod 3 = 0 exactly when w lies in the kernel of the tautological
/// map onto C3.
long long graded_degree(const fpgroup::Word& w);

/// Image of w under the tautological map onto C3 = {0, 1, 2} (a -> 1, b -> 2).
int mu_image(const fpgroup::Word& w);

/// Relator verification outcome. In exact mode every relator must evaluate
/// to the identity; in projective mode to a scalar matrix (factor recorded).
struct RelatorCheck {
    bool ok = true;
    int failed_relator = -1;
    std::string residual;                 // printed matrix on failure
    std::vector<std::string> scalar_factors;
};

template <class F>
RelatorCheck check_relators(const WordEvaluator<F>& ev, const fpgroup::Presentation& p) {
    RelatorCheck out;
    for (size_t i = 0; i < p.relators.size(); ++i) {
        Mat3<F> m = ev.eval(p.relators[i]);
        F scalar = F::one();
        bool trivial = ev.projective() ? (m.is_scalar(&scalar) && !scalar.is_zero())
                                       : m.is_identity();
        if (!trivial) {
            out.ok = false;
            out.failed_relator = static_cast<int>(i);
            out.residual = m.to_string();
            return out;
        }
        out.scalar_factors.push_back(scalar.to_string());
    }
    return out;
}

}  // namespace polcert::matrep

#endif
