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

#include "polcert/derivation.hpp"

#include "polcert/presentation.hpp"

namespace polcert::fpgroup {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::Relator: return "relator instance";
        case Rule::FreeReduction: return "free reduction";
        case Rule::Symmetry: return "symmetry";
        case Rule::Transitivity: return "transitivity";
        case Rule::ProductBothSides: return "product of equalities";
        case Rule::InverseBothSides: return "inverse of both sides";
        case Rule::Conjugate: return "conjugation";
        case Rule::PowerBothSides: return "power of both sides";
        case Rule::ExponentArithmetic: return "exponent arithmetic mod n";
    }
    return "?";
}

namespace {

struct Checker {
    const std::vector<Word>& relators;
    const std::vector<DerivationStep>& steps;

    std::string check_step(size_t i) const {
        const DerivationStep& st = steps[i];
        auto premise = [&](int idx) -> const DerivationStep* {
            if (idx < 0 || idx >= static_cast<int>(i)) return nullptr;
            return &steps[idx];
        };
        const DerivationStep* p1 = premise(st.premise1);
        const DerivationStep* p2 = premise(st.premise2);

        switch (st.rule) {
            case Rule::Relator: {
                if (st.relator_index < 0 ||
                    st.relator_index >= static_cast<int>(relators.size()))
                    return "relator index out of range";
                if (st.lhs != relators[st.relator_index] || !st.rhs.empty())
                    return "claimed equality is not the cited relator = 1";
                return {};
            }
            case Rule::FreeReduction:
                return st.lhs == st.rhs ? std::string{}
                                        : "sides do not reduce to the same word";
            case Rule::Symmetry:
                if (!p1) return "missing premise";
                if (st.lhs != p1->rhs || st.rhs != p1->lhs) return "not the mirrored premise";
                return {};
            case Rule::Transitivity:
                if (!p1 || !p2) return "missing premise";
                if (p1->rhs != p2->lhs) return "middle terms differ";
                if (st.lhs != p1->lhs || st.rhs != p2->rhs) return "endpoints differ";
                return {};
            case Rule::ProductBothSides:
                if (!p1 || !p2) return "missing premise";
                if (st.lhs != p1->lhs * p2->lhs || st.rhs != p1->rhs * p2->rhs)
                    return "sides are not the products of the premises";
                return {};
            case Rule::InverseBothSides:
                if (!p1) return "missing premise";
                if (st.lhs != p1->lhs.inverse() || st.rhs != p1->rhs.inverse())
                    return "sides are not the inverses of the premise";
                return {};
            case Rule::Conjugate:
                if (!p1) return "missing premise";
                if (st.lhs != p1->lhs.conjugated_by(st.base) ||
                    st.rhs != p1->rhs.conjugated_by(st.base))
                    return "sides are not the premise conjugated by the given word";
                return {};
            case Rule::PowerBothSides:
                if (!p1) return "missing premise";
                if (st.lhs != p1->lhs.pow(st.exponent) || st.rhs != p1->rhs.pow(st.exponent))
                    return "sides are not the k-th powers of the premise";
                return {};
            case Rule::ExponentArithmetic: {
                if (!p1) return "missing premise";
                if (st.modulus < 1) return "modulus must be positive";
                if (p1->lhs != st.base.pow(st.modulus) || !p1->rhs.empty())
                    return "premise is not base^n = 1";
                long long diff = st.exponent - st.exponent2;
                long long rem = diff % st.modulus;
                if (rem != 0) return "exponents are not congruent mod n";
                if (st.lhs != st.base.pow(st.exponent) || st.rhs != st.base.pow(st.exponent2))
                    return "sides are not base^k and base^m";
                return {};
            }
        }
        return "unknown rule";
    }
};

}  // namespace

DerivationVerdict check_derivation(const std::vector<Word>& relators,
                                   const DerivationScript& script) {
    Checker c{relators, script.steps};
    for (size_t i = 0; i < script.steps.size(); ++i) {
        std::string err = c.check_step(i);
        if (!err.empty())
            return {false, static_cast<int>(i),
                    std::string(rule_name(script.steps[i].rule)) + ": " + err};
    }
    for (const auto& [lhs, rhs] : script.conclusions) {
        bool found = false;
        for (const DerivationStep& st : script.steps)
            if ((st.lhs == lhs && st.rhs == rhs) || (st.lhs == rhs && st.rhs == lhs)) {
                found = true;
                break;
            }
        if (!found)
            return {false, -1, "conclusion not proven: " + lhs.to_string() + " = " + rhs.to_string()};
    }
    return {true, -1, ""};
}

std::vector<Word> quadratic_consequence_relators() {
    Presentation pol2 = pol2_presentation();
    Word a = Word::gen(0), b = Word::gen(1);
    Word ai = a.inverse(), bi = b.inverse();
    // (beta_sigma(sigma), beta_sigma(tau)) and (beta_tau(sigma), beta_tau(tau))
    std::vector<std::vector<Word>> pairs = {
        {ai * b * ai, ai * bi},
        {bi * ai, bi * a * bi},
    };
    std::vector<Word> out;
    for (const auto& pair : pairs)
        for (const Word& r : pol2.relators) out.push_back(r.substituted(pair));
    return out;
}

namespace {

struct ScriptBuilder {
    DerivationScript script;

    int add(DerivationStep st) {
        script.steps.push_back(std::move(st));
        return static_cast<int>(script.steps.size()) - 1;
    }
    const DerivationStep& at(int i) const { return script.steps[i]; }

    int relator(const std::vector<Word>& rels, int k, std::string note = {}) {
        DerivationStep st;
        st.rule = Rule::Relator;
        st.relator_index = k;
        st.lhs = rels[k];
        st.note = std::move(note);
        return add(st);
    }
    int refl(const Word& w) {
        DerivationStep st;
        st.rule = Rule::FreeReduction;
        st.lhs = w;
        st.rhs = w;
        return add(st);
    }
    int sym(int i) {
        DerivationStep st;
        st.rule = Rule::Symmetry;
        st.premise1 = i;
        st.lhs = at(i).rhs;
        st.rhs = at(i).lhs;
        return add(st);
    }
    int trans(int i, int j, std::string note = {}) {
        DerivationStep st;
        st.rule = Rule::Transitivity;
        st.premise1 = i;
        st.premise2 = j;
        st.lhs = at(i).lhs;
        st.rhs = at(j).rhs;
        st.note = std::move(note);
        return add(st);
    }
    int prod(int i, int j) {
        DerivationStep st;
        st.rule = Rule::ProductBothSides;
        st.premise1 = i;
        st.premise2 = j;
        st.lhs = at(i).lhs * at(j).lhs;
        st.rhs = at(i).rhs * at(j).rhs;
        return add(st);
    }
    int inv(int i) {
        DerivationStep st;
        st.rule = Rule::InverseBothSides;
        st.premise1 = i;
        st.lhs = at(i).lhs.inverse();
        st.rhs = at(i).rhs.inverse();
        return add(st);
    }
    int conj(int i, const Word& c, std::string note = {}) {
        DerivationStep st;
        st.rule = Rule::Conjugate;
        st.premise1 = i;
        st.base = c;
        st.lhs = at(i).lhs.conjugated_by(c);
        st.rhs = at(i).rhs.conjugated_by(c);
        st.note = std::move(note);
        return add(st);
    }
    int power(int i, long long k) {
        DerivationStep st;
        st.rule = Rule::PowerBothSides;
        st.premise1 = i;
        st.exponent = k;
        st.lhs = at(i).lhs.pow(k);
        st.rhs = at(i).rhs.pow(k);
        return add(st);
    }
    int expmod(int i, const Word& base, long long k, long long m, long long n,
               std::string note = {}) {
        DerivationStep st;
        st.rule = Rule::ExponentArithmetic;
        st.premise1 = i;
        st.base = base;
        st.exponent = k;
        st.exponent2 = m;
        st.modulus = n;
        st.lhs = base.pow(k);
        st.rhs = base.pow(m);
        st.note = std::move(note);
        return add(st);
    }
};

}  // namespace

DerivationScript cubic_derivation_script() {
    Word a = Word::gen(0), b = Word::gen(1);
    Word ai = a.inverse(), bi = b.inverse();
    Word z = ai * bi;            // = (ba)^-1
    Word w = ai * b * ai;        // = (ab^-1a)^-1
    Word v = z * w.inverse();    // = a^-1 (b^-1 a b^-1) a
    Word x2 = bi * ai, y2 = bi * a * bi;

    std::vector<Word> rels = quadratic_consequence_relators();
    ScriptBuilder sb;
    sb.script.named_words = {{"z", z}, {"w", w}, {"v", v}};

    int r_w9 = sb.relator(rels, 0, "w^9 = 1");
    int r_z9 = sb.relator(rels, 1, "z^9 = 1");
    int r_3 = sb.relator(rels, 2);
    int r_4 = sb.relator(rels, 3);
    int r_y29 = sb.relator(rels, 5);
    int r_7 = sb.relator(rels, 6);
    int r_8 = sb.relator(rels, 7);

    // Relation (5) is redundant: it is (2) conjugated by a.
    sb.conj(r_z9, a, "x2^9 = 1 follows from z^9 = 1 by conjugation with a");

    // Equality forms of the conjugation relators.
    int e_3 = sb.prod(r_3, sb.refl(w.pow(4)));    // z w z^-1 = w^4
    int e_4 = sb.prod(r_4, sb.refl(z.pow(4)));    // w z w^-1 = z^4
    int e_7 = sb.prod(r_7, sb.refl(x2.pow(4)));   // y2 x2 y2^-1 = x2^4
    int e_8 = sb.prod(r_8, sb.refl(y2.pow(4)));   // x2 y2 x2^-1 = y2^4

    // Conjugating by a^-1 turns the second family into statements about z, v.
    int e_v9 = sb.conj(r_y29, ai, "v^9 = 1");
    int e_vzv = sb.conj(e_7, ai, "v z v^-1 = z^4");
    int e_zvz = sb.conj(e_8, ai, "z v z^-1 = v^4");
    (void)e_v9;

    // w^-1 z w = z^(4^8) = z^7.
    int e_winv = sb.expmod(r_w9, w, -1, 8, 9, "w^-1 = w^8");
    int t1 = sb.prod(e_winv, sb.refl(z));
    int t2 = sb.prod(t1, sb.inv(e_winv));  // w^-1 z w = w^8 z w^-8
    // Iterate w^k z w^-k = z^(4^k).
    int chain = e_4;
    long long e = 4;
    for (int k = 1; k < 8; ++k) {
        int cstep = sb.conj(chain, w);
        int pstep = sb.power(e_4, e);  // (w z w^-1)^(4^k) = z^(4^(k+1))
        chain = sb.trans(cstep, pstep);
        e *= 4;
    }
    int t3 = sb.trans(t2, chain);  // w^-1 z w = z^65536
    int t4 = sb.expmod(r_z9, z, 65536, 7, 9, "4^8 = 65536 = 7 (mod 9)");
    int t5 = sb.trans(t3, t4, "w^-1 z w = z^7");

    // z^4 = v z v^-1 = z (w^-1 z w) z^-1 = z^7, hence z^3 = 1.
    int t6 = sb.conj(t5, z);                      // z w^-1 z w z^-1 = z^7
    int t7 = sb.trans(sb.sym(e_vzv), t6);         // z^4 = z^7
    int t8 = sb.prod(sb.refl(z.pow(-4)), t7);     // 1 = z^3
    int c_z3 = sb.sym(t8);                        // z^3 = 1

    // z is central among v, w; then w^3 = v^3 = 1.
    int t9 = sb.expmod(c_z3, z, 4, 1, 3, "z^4 = z");
    int t10 = sb.trans(e_4, t9);                  // w z w^-1 = z
    int c_wz = sb.prod(t10, sb.refl(w));          // w z = z w
    int t11 = sb.trans(e_vzv, t9);                // v z v^-1 = z
    int c_vz = sb.prod(t11, sb.refl(v));          // v z = z v

    int t12 = sb.prod(sb.sym(c_wz), sb.refl(z.inverse()));  // z w z^-1 = w
    int t13 = sb.trans(sb.sym(e_3), t12);                   // w^4 = w
    int c_w3 = sb.prod(sb.refl(w.inverse()), t13);          // w^3 = 1

    int t14 = sb.prod(sb.sym(c_vz), sb.refl(z.inverse()));  // z v z^-1 = v
    int t15 = sb.trans(sb.sym(e_zvz), t14);                 // v^4 = v
    int c_v3 = sb.prod(sb.refl(v.inverse()), t15);          // v^3 = 1

    // The three relators of the cubic universal group.
    int c_ba = sb.inv(c_z3);   // (ba)^3 = 1
    int c_aba = sb.inv(c_w3);  // (ab^-1a)^3 = 1
    int t16 = sb.inv(c_wz);    // z^-1 w^-1 = w^-1 z^-1
    int c_comm = sb.prod(t16, sb.refl(z * w));  // [ba, ab^-1a] = 1
    (void)c_v3;
    (void)c_ba;
    (void)c_aba;
    (void)c_comm;

    sb.script.conclusions = {
        {z.pow(3), Word::identity()},
        {w.pow(3), Word::identity()},
        {v.pow(3), Word::identity()},
        {w * z, z * w},
        {v * z, z * v},
        {(b * a).pow(3), Word::identity()},
        {(a * bi * a).pow(3), Word::identity()},
        {commutator(b * a, a * bi * a), Word::identity()},
    };
    return sb.script;
}

DerivationScript bogus_z2_script() {
    Word a = Word::gen(0), b = Word::gen(1);
    Word z = a.inverse() * b.inverse();
    std::vector<Word> rels = quadratic_consequence_relators();
    ScriptBuilder sb;
    int r_z9 = sb.relator(rels, 1);
    // Claims z^2 = z^0 from z^9 = 1; 2 and 0 are not congruent mod 9.
    DerivationStep st;
    st.rule = Rule::ExponentArithmetic;
    st.premise1 = r_z9;
    st.base = z;
    st.exponent = 2;
    st.exponent2 = 0;
    st.modulus = 9;
    st.lhs = z.pow(2);
    st.rhs = Word::identity();
    sb.add(st);
    sb.script.conclusions = {{z.pow(2), Word::identity()}};
    return sb.script;
}

}  // namespace polcert::fpgroup
