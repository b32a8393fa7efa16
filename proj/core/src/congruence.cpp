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

#include "polcert/congruence.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polcert::matrep {

using fields::Eisen;
using fields::GF3;
using fields::PolyGF3;

using fields::RatFuncGF3;
using fields::TowerElement;
using fields::Valuation;

int gf3_code(const Mat3Gf3& m) {
    int code = 0;
    for (int k = 8; k >= 0; --k) code = code * 3 + m.e[static_cast<size_t>(k)].value();
    return code;
}

Mat3Gf3 gf3_decode(int code) {
    Mat3Gf3 m;
    for (int k = 0; k < 9; ++k) {
        m.e[static_cast<size_t>(k)] = GF3(code % 3);
        code /= 3;
    }
    return m;
}

DescendResult descend_and_normalize(const WordEvaluator<TowerElement>& pi,
                                    const fpgroup::Word& w) {
    long long d = graded_degree(w);
    require(d % 3 == 0, "descend: graded degree " + std::to_string(d) +
                            " not divisible by 3 (word is not in the kernel of mu)");
    Mat3<TowerElement> m = pi.eval(w);

    // Each entry must be a pure r^0 component: the grading puts eval(w) in
    // r^d * M3(Q(omega)) and reduction by r^3 = 1-omega folds r^d into the
    // Eisen coefficient when d = 0 (mod 3).
    Mat3<Eisen> q;
    for (int k = 0; k < 9; ++k) {
        const TowerElement& x = m.e[static_cast<size_t>(k)];
        if (x.is_zero()) continue;
        auto pure = x.pure_r_component();
        require(pure && pure->first == 0, "descend: entry has mixed r-degrees");
        q.e[static_cast<size_t>(k)] = pure->second;
    }

    // Strip the scalar lambda^(d/3) (= r^d).
    long long shift = d / 3;
    if (shift != 0) {
        Eisen lam_pow = Eisen::one();
        for (long long i = 0; i < (shift > 0 ? shift : -shift); ++i)
            lam_pow *= Eisen::lambda();
        Eisen factor = shift > 0 ? lam_pow.inverse() : lam_pow;
        for (auto& x : q.e) x = x * factor;
    }

    // Clear denominators.
    BigInt common = 1;
    for (const auto& x : q.e) common = lcm(lcm(common, den(x.c0())), den(x.c1()));
    for (auto& x : q.e) x = x * Eisen(Rat(common));

    // Divide by the Z[omega] content.
    Eisen content = Eisen::zero();
    for (const auto& x : q.e)
        if (!x.is_zero()) content = content.is_zero() ? x : fields::eisen_gcd(content, x);
    require(!content.is_zero(), "descend: zero matrix");
    for (auto& x : q.e) {
        Eisen y = x / content;
        require(y.is_integral(), "descend: content division not exact");
        x = y;
    }

    // Determinant must be a rational unit for PSL3(Z[omega]) membership:
    // units of Z[omega] are +-omega^k and cubes of units are +-1, so only
    // det = +-1 can be rescaled to 1.
    Eisen d0 = q.det();
    require(d0 == Eisen::one() || d0 == -Eisen::one(),
            "not in PSL3(Z[omega]): normalized determinant is " + d0.to_string());

    // Canonical unit multiple with determinant exactly 1: u^3 = -1 flips the
    // sign, u^3 = 1 preserves it; pick the smallest key among the three.
    std::vector<Mat3<Eisen>> candidates;
    for (const Eisen& u : fields::eisen_units()) {
        Eisen u3 = u * u * u;  // det(uM) = u^3 det(M)
        if (u3 * d0 == Eisen::one()) candidates.push_back(q.scaled(u));
    }
    require(!candidates.empty(), "descend: no unit normalizes the determinant");
    Mat3<Eisen> best = candidates[0];
    for (const auto& c : candidates)
        if (c.key() < best.key()) best = c;
    return {best, d};
}

bool entries_in_u_polynomials(const Mat3<RatFuncGF3>& m) {
    return std::all_of(m.e.begin(), m.e.end(), [](const RatFuncGF3& x) {
        return x.is_polynomial() && x.is_in_u();
    });
}

Mat3Gf3 reduce_mod_lambda(const Mat3<Eisen>& m) {
    Mat3Gf3 out;
    for (int k = 0; k < 9; ++k) out.e[static_cast<size_t>(k)] = fields::residue_lambda(m.e[static_cast<size_t>(k)]);
    GF3 d = out.det();
    require(!d.is_zero(), "reduce_mod_lambda: singular residue");
    if (d == GF3(2)) out = out.scaled(GF3(2));  // det(2M) = 8 det(M) = 2 det(M)
    require(out.det() == GF3::one(), "reduce_mod_lambda: cannot normalize determinant");
    return out;
}

Mat3Gf3 level1_log_lambda(const Mat3<Eisen>& m) {
    require(m.det() == Eisen::one(), "level1 log: determinant must be 1");
    Mat3Gf3 x;
    for (int k = 0; k < 9; ++k) {
        Eisen diff = m.e[static_cast<size_t>(k)] - (k % 4 == 0 ? Eisen::one() : Eisen::zero());
        if (diff.is_zero()) continue;
        Valuation v = fields::lambda_valuation(diff);
        require(!v.is_infinite && v.v >= 1,
                "level1 log: matrix is not congruent to the identity mod lambda");
        x.e[static_cast<size_t>(k)] = fields::residue_lambda(fields::divide_lambda_power(diff, 1));
    }
    require(x.trace().is_zero(), "level1 log: trace is nonzero");
    return x;
}

Mat3Gf3 reduce_mod_u(const Mat3<RatFuncGF3>& m) {
    Mat3Gf3 out;
    for (int k = 0; k < 9; ++k)
        out.e[static_cast<size_t>(k)] =
            fields::u_valuation_and_residue(m.e[static_cast<size_t>(k)]).second;
    require(out.det() == GF3::one(), "reduce_mod_u: determinant of residue is not 1");
    return out;
}

Mat3Gf3 level1_log_u(const Mat3<RatFuncGF3>& m) {
    require(entries_in_u_polynomials(m), "level1 log: entries not in F3[u]");
    Mat3Gf3 x;
    for (int k = 0; k < 9; ++k) {
        RatFuncGF3 diff = m.e[static_cast<size_t>(k)] -
                          (k % 4 == 0 ? RatFuncGF3::one() : RatFuncGF3::zero());
        if (diff.is_zero()) continue;
        PolyGF3 pu = diff.as_u_polynomial();
        require(pu.trailing_degree() >= 1,
                "level1 log: matrix is not congruent to the identity mod u");
        x.e[static_cast<size_t>(k)] = pu.coeff(1);
    }
    require(x.trace().is_zero(), "level1 log: trace is nonzero");
    return x;
}

Mat3<RatFuncGF3> truncate_mod_u(const Mat3<RatFuncGF3>& m, int n) {
    require(entries_in_u_polynomials(m), "truncate_mod_u: entries not in F3[u]");
    Mat3<RatFuncGF3> out;
    for (int k = 0; k < 9; ++k) {
        const PolyGF3& p = m.e[static_cast<size_t>(k)].num();
        std::vector<GF3> kept;
        for (int i = 0; i <= p.degree() && i < 3 * n; ++i) kept.push_back(p.coeff(i));
        out.e[static_cast<size_t>(k)] = RatFuncGF3(PolyGF3(std::move(kept)));
    }
    return out;
}

std::vector<Mat3Gf3> group_closure(const std::vector<Mat3Gf3>& generators, std::size_t guard) {
    std::set<int> seen;
    std::vector<int> order;
    auto push = [&](const Mat3Gf3& m) {
        int code = gf3_code(m);
        if (seen.insert(code).second) {
            require(order.size() < guard, "group_closure: guard exceeded");
            order.push_back(code);
        }
    };
    push(Mat3Gf3::identity());
    for (std::size_t head = 0; head < order.size(); ++head) {
        Mat3Gf3 x = gf3_decode(order[head]);
        for (const Mat3Gf3& g : generators) push(x * g);
    }
    std::vector<Mat3Gf3> out;
    out.reserve(order.size());
    for (int code : seen) out.push_back(gf3_decode(code));  // set: sorted codes
    return out;
}

std::vector<Mat3Gf3> standard_unitriangular() {
    std::vector<Mat3Gf3> out;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                Mat3Gf3 m = Mat3Gf3::identity();
                m.at(0, 1) = GF3(a);
                m.at(0, 2) = GF3(b);
                m.at(1, 2) = GF3(c);
                out.push_back(m);
            }
    std::sort(out.begin(), out.end(),
              [](const Mat3Gf3& x, const Mat3Gf3& y) { return gf3_code(x) < gf3_code(y); });
    return out;
}

ImageComparison compare_with_standard_unitriangular(const std::vector<Mat3Gf3>& images) {
    ImageComparison out;
    std::vector<Mat3Gf3> group = group_closure(images);
    out.order = group.size();

    auto codes = [](const std::vector<Mat3Gf3>& v) {
        std::set<int> s;
        for (const auto& m : v) s.insert(gf3_code(m));
        return s;
    };
    std::set<int> gset = codes(group);
    std::set<int> sset = codes(standard_unitriangular());
    if (gset == sset) {
        out.equals_standard = true;
        out.conjugator = Mat3Gf3::identity();
        return out;
    }
    if (gset.size() != sset.size()) return out;

    // Search GL3(F3) for a conjugator, in code order (deterministic).
    for (int code = 0; code < 19683; ++code) {
        Mat3Gf3 c = gf3_decode(code);
        if (c.det().is_zero()) continue;
        Mat3Gf3 ci = c.inverse();
        std::set<int> conj;
        for (int g : gset) conj.insert(gf3_code(c * gf3_decode(g) * ci));
        if (conj == sset) {
            out.conjugator = c;
            return out;
        }
    }
    return out;
}

void SubspaceGf3::add(const Mat3Gf3& m) {
    std::array<GF3, 9> v = m.e;
    // reduce against existing rows
    for (const auto& row : basis_) {
        int pivot = -1;
        for (int k = 0; k < 9; ++k)
            if (!row[static_cast<size_t>(k)].is_zero()) {
                pivot = k;
                break;
            }
        GF3 c = v[static_cast<size_t>(pivot)];
        if (!c.is_zero())
            for (int k = 0; k < 9; ++k)
                v[static_cast<size_t>(k)] -= c * row[static_cast<size_t>(k)];
    }
    int pivot = -1;
    for (int k = 0; k < 9; ++k)
        if (!v[static_cast<size_t>(k)].is_zero()) {
            pivot = k;
            break;
        }
    if (pivot < 0) return;  // dependent
    // normalize pivot to 1
    GF3 inv = v[static_cast<size_t>(pivot)].inverse();
    for (auto& x : v) x *= inv;
    // eliminate the new pivot from existing rows, then insert in pivot order
    for (auto& row : basis_) {
        GF3 c = row[static_cast<size_t>(pivot)];
        if (c.is_zero()) continue;
        for (int k = 0; k < 9; ++k) row[static_cast<size_t>(k)] -= c * v[static_cast<size_t>(k)];
    }
    auto pivot_of = [](const std::array<GF3, 9>& row) {
        for (int k = 0; k < 9; ++k)
            if (!row[static_cast<size_t>(k)].is_zero()) return k;
        return 9;
    };
    auto pos = std::lower_bound(basis_.begin(), basis_.end(), v,
                                [&](const auto& r1, const auto& r2) {
                                    return pivot_of(r1) < pivot_of(r2);
                                });
    basis_.insert(pos, v);
}

bool SubspaceGf3::contains(const Mat3Gf3& m) const {
    std::array<GF3, 9> v = m.e;
    for (const auto& row : basis_) {
        int pivot = -1;
        for (int k = 0; k < 9; ++k)
            if (!row[static_cast<size_t>(k)].is_zero()) {
                pivot = k;
                break;
            }
        GF3 c = v[static_cast<size_t>(pivot)];
        if (!c.is_zero())
            for (int k = 0; k < 9; ++k)
                v[static_cast<size_t>(k)] -= c * row[static_cast<size_t>(k)];
    }
    return std::all_of(v.begin(), v.end(), [](GF3 x) { return x.is_zero(); });
}

SubspaceGf3 SubspaceGf3::joined(const SubspaceGf3& other) const {
    SubspaceGf3 out = *this;
    for (const auto& row : other.basis_) {
        Mat3Gf3 m;
        m.e = row;
        out.add(m);
    }
    return out;
}

SubspaceGf3 displayed_level1_set_char0() {
    // {(0, a, b; c, d, e; 0, f, -d)}: basis E12, E13, E21, E22 - E33, E23, E32.
    SubspaceGf3 s;
    auto unit = [](int i, int j) {
        Mat3Gf3 m;
        m.at(i, j) = GF3::one();
        return m;
    };
    s.add(unit(0, 1));
    s.add(unit(0, 2));
    s.add(unit(1, 0));
    s.add(unit(1, 2));
    s.add(unit(2, 1));
    Mat3Gf3 d;
    d.at(1, 1) = GF3::one();
    d.at(2, 2) = GF3(2);
    s.add(d);
    return s;
}

SubspaceGf3 scalar_line() {
    SubspaceGf3 s;
    s.add(Mat3Gf3::identity());
    return s;
}

BigInt psl3_f3_order() { return BigInt(5616); }

BigInt index_reconstruction(long level0_order, int level1_dim, int ambient_level1_dim) {
    require(level0_order > 0 && level1_dim >= 0 && ambient_level1_dim >= level1_dim,
            "index_reconstruction: bad arguments");
    require(psl3_f3_order() % level0_order == 0,
            "index_reconstruction: level-0 order does not divide |PSL3(F3)|");
    BigInt idx = psl3_f3_order() / level0_order;
    for (int i = 0; i < ambient_level1_dim - level1_dim; ++i) idx *= 3;
    return idx;
}

}  // namespace polcert::matrep
