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

// Acceptance suite: one line per criterion, exact arithmetic throughout
// (tolerance is zero everywhere). Exit status is nonzero if any criterion
// fails. Criterion 8 is expected to fail in its mod-u half: the image there
// is the (1 2)-conjugate of the standard unitriangular subgroup, which is
// isomorphic but not equal to it; the suite prints the verified conjugate.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "polcert/derivation.hpp"
#include "polcert/homcount.hpp"
#include "polcert/pipelines.hpp"
#include "polcert/polymap.hpp"
#include "polcert/snf.hpp"
#include "polcert/todd_coxeter.hpp"

using namespace polcert;
using namespace polcert::cert;
using namespace polcert::matrep;
using fields::Eisen;
using fields::GF3;
using fields::RatFuncGF3;
using fields::TowerElement;
using fpgroup::Presentation;
using fpgroup::Word;
using polymap::FiniteGroup;

namespace {

struct Suite {
    int failures = 0;

    template <class Fn>
    void criterion(int number, const std::string& title, Fn&& fn) {
        auto start = std::chrono::steady_clock::now();
        bool pass = false;
        std::string detail;
        try {
            pass = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%2d] %s  %s (%.2fs)%s%s\n", number, pass ? "PASS" : "FAIL", title.c_str(),
                    secs, detail.empty() ? "" : "\n      ", detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
};

std::mt19937 acceptance_rng(0xacce97);

Word random_two_letter_word(int maxlen) {
    std::uniform_int_distribution<int> len(1, maxlen);
    std::uniform_int_distribution<int> d(0, 3);
    std::vector<std::int32_t> letters;
    int n = len(acceptance_rng);
    for (int i = 0; i < n; ++i) {
        int v = d(acceptance_rng);
        letters.push_back(v < 2 ? v + 1 : -(v - 1));
    }
    return Word::from_letters(letters);
}

const std::vector<std::string> kAB = {"a", "b"};

}  // namespace

int main() {
    Suite suite;
    RunConfig cfg;

    // ---------------------------------------------------------------- 1
    suite.criterion(1, "coset enumeration of the quadratic presentation: 27 cosets, < 1 s",
                    [&](std::string& detail) {
                        auto t0 = std::chrono::steady_clock::now();
                        Presentation p = fpgroup::pol2_presentation();
                        fpgroup::CosetTable t = fpgroup::todd_coxeter(p, {}, cfg.coset_limit);
                        double secs = std::chrono::duration<double>(
                                          std::chrono::steady_clock::now() - t0)
                                          .count();
                        bool ok = t.complete && t.index() == 27 &&
                                  fpgroup::verify_coset_table(t, p, {}) && secs < 1.0;
                        detail = "cosets=" + std::to_string(t.index()) +
                                 ", verified table, t=" + std::to_string(secs) + "s";
                        return ok;
                    });

    // ---------------------------------------------------------------- 2
    suite.criterion(2, "order-27 model: structure constants, exponent 9, isomorphism type",
                    [&](std::string& detail) {
                        polymap::Pol2Model model;  // internal checks throw on failure
                        bool exp_ok = model.group().exponent() == 9 &&
                                      FiniteGroup::heisenberg27().exponent() == 3;
                        bool iso = polymap::is_isomorphic_small(model.group(),
                                                                FiniteGroup::c9_semidirect_c3());
                        bool notheis = !polymap::is_isomorphic_small(
                            model.group(), FiniteGroup::heisenberg27());
                        detail = "a^2=(e1,s^2), a^3=(e1+e2,1), b^3=(2e1+2e2,1), bab^-1=a^4, "
                                 "aba^-1=b^4 all hold";
                        return exp_ok && iso && notheis;
                    });

    // ---------------------------------------------------------------- 3
    suite.criterion(3, "abelianization of the cubic presentation is [3, 9]",
                    [&](std::string& detail) {
                        auto f = fpgroup::abelianization(fpgroup::gamma_presentation());
                        detail = "invariant factors:";
                        for (auto& x : f) detail += " " + x.str();
                        return f.size() == 2 && f[0] == 3 && f[1] == 9;
                    });

    // ---------------------------------------------------------------- 4
    suite.criterion(
        4, "transcribed derivation certifies z^3 = w^3 = v^3 = 1 via 4^8 = 7 (mod 9)",
        [&](std::string& detail) {
            auto rels = fpgroup::quadratic_consequence_relators();
            auto script = fpgroup::cubic_derivation_script();
            auto v = fpgroup::check_derivation(rels, script);
            bool modstep = false;
            for (const auto& st : script.steps)
                if (st.rule == fpgroup::Rule::ExponentArithmetic && st.exponent == 65536 &&
                    st.exponent2 == 7 && st.modulus == 9)
                    modstep = true;
            detail = "steps=" + std::to_string(script.steps.size()) +
                     (v.valid ? ", all justified" : ", FAILED: " + v.reason);
            return v.valid && modstep &&
                   mod_pow(BigInt(4), BigInt(8), BigInt(9)) == 7;
        });

    // ---------------------------------------------------------------- 5
    suite.criterion(
        5, "relators hold: exactly under rho (det 1), projectively under pi; < 1 s",
        [&](std::string& detail) {
            auto t0 = std::chrono::steady_clock::now();
            Presentation gamma = fpgroup::gamma_presentation();
            auto rho = rho_generators();
            auto pi = pi_generators();
            bool det_ok = rho.image_a().det() == RatFuncGF3::one() &&
                          rho.image_b().det() == RatFuncGF3::one();
            RelatorCheck r3 = check_relators(rho, gamma);
            RelatorCheck r0 = check_relators(pi, gamma);
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            detail = "scalar factors of pi:";
            for (auto& s : r0.scalar_factors) detail += " " + s;
            detail += ", t=" + std::to_string(secs) + "s";
            return det_ok && r3.ok && r0.ok && secs < 1.0;
        });

    // ---------------------------------------------------------------- 6
    suite.criterion(
        6, "infinite order of a and b certified by traces; ba stays inconclusive",
        [&](std::string& detail) {
            auto rho = rho_generators();
            auto ra = infinite_order_certificate(rho, Word::gen(0));
            auto rb = infinite_order_certificate(rho, Word::gen(1));
            auto rba = infinite_order_certificate(rho, fpgroup::parse_word("b*a", kAB));
            detail = "trace(rho(a)^2) = " + ra.witness_trace +
                     ", trace(rho(b)) = " + rb.witness_trace + ", ba: inconclusive";
            return ra.certified && ra.witness_power == 2 && ra.witness_trace == "t" &&
                   rb.certified && rb.witness_power == 1 && rb.witness_trace == "t" &&
                   !rba.certified;
        });

    // ---------------------------------------------------------------- 7
    suite.criterion(
        7, "4 Schreier generators; pi-images in PSL3(Z[omega]), rho-images in F3[u]",
        [&](std::string& detail) {
            KernelData kd = compute_kernel_data();
            bool four = kd.mu_kernel.schreier_generators.size() == 4;
            bool pi_ok = true;
            for (const auto& rep : kd.pi_reps) {
                for (const auto& x : rep.e) pi_ok = pi_ok && x.is_integral();
                pi_ok = pi_ok && (rep.det() == Eisen::one() || rep.det() == -Eisen::one());
            }
            bool rho_ok = true;
            for (const auto& m : kd.rho_images) rho_ok = rho_ok && entries_in_u_polynomials(m);
            detail = "generators:";
            for (const Word& w : kd.mu_kernel.schreier_generators)
                detail += " " + w.to_string(kAB);
            return four && pi_ok && rho_ok;
        });

    // ---------------------------------------------------------------- 8
    suite.criterion(
        8, "level-0 images are order 27 and equal the standard unitriangular subgroup",
        [&](std::string& detail) {
            KernelData kd = compute_kernel_data();
            ImageComparison c0 = compare_with_standard_unitriangular(kd.pi_mod_lambda);
            ImageComparison c3 = compare_with_standard_unitriangular(kd.rho_mod_u);
            bool lambda_ok = c0.order == 27 && c0.equals_standard;
            bool u_strict = c3.order == 27 && c3.equals_standard;
            detail = std::string("mod-lambda: order 27, equals standard U+ -> ") +
                     (lambda_ok ? "ok" : "FAIL");
            detail += "; mod-u: order " + std::to_string(c3.order) +
                      ", strict equality fails: the image is the conjugate of U+ by " +
                      (c3.conjugator ? c3.conjugator->to_string() : "(none found)") +
                      " (isomorphic image verified, matching the source theorem's claim)";
            return lambda_ok && u_strict;
        });

    // ---------------------------------------------------------------- 9
    suite.criterion(
        9, "level-1 spans: dim 7 (char 3), dim 6 matching the displayed set and index 624 "
           "(char 0); < 60 s",
        [&](std::string& detail) {
            auto t0 = std::chrono::steady_clock::now();
            KernelData kd = compute_kernel_data();
            auto words0 = second_kernel_words(kd.mu_kernel, kd.pi_mod_lambda);
            auto words3 = second_kernel_words(kd.mu_kernel, kd.rho_mod_u);
            Level1Analysis a0 = level1_analysis_char0(words0);
            Level1Analysis a3 = level1_analysis_char3(words3);
            BigInt idx = index_reconstruction(27, a0.quotient_dim, 7);
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            detail = "char3 dim=" + std::to_string(a3.raw_dim) +
                     "; char0 quotient dim=" + std::to_string(a0.quotient_dim) +
                     " (raw " + std::to_string(a0.raw_dim) + "), displayed-set match=" +
                     (a0.matches_displayed_set ? "yes" : "no") + ", index=" + idx.str() +
                     ", t=" + std::to_string(secs) + "s";
            return a3.raw_dim == 7 && a0.quotient_dim == 6 && a0.matches_displayed_set &&
                   idx == 624 && idx == BigInt(16) * 3 * 13 && words0.size() == 82 &&
                   secs < 60.0;
        });

    // ---------------------------------------------------------------- 10
    suite.criterion(
        10, "no automorphism of U+ intertwines the two reductions (all of Aut enumerated)",
        [&](std::string& detail) {
            KernelData kd = compute_kernel_data();
            auto c0 = compare_with_standard_unitriangular(kd.pi_mod_lambda);
            auto c3 = compare_with_standard_unitriangular(kd.rho_mod_u);
            if (!c0.conjugator || !c3.conjugator) {
                detail = "images are not conjugate to the standard subgroup";
                return false;
            }
            auto standardize = [](const std::vector<Mat3Gf3>& v, const Mat3Gf3& c) {
                std::vector<Mat3Gf3> out;
                Mat3Gf3 ci = c.inverse();
                for (const auto& m : v) out.push_back(c * m * ci);
                return out;
            };
            IntertwinerResult r = automorphism_intertwiner_search(
                standardize(kd.pi_mod_lambda, *c0.conjugator),
                standardize(kd.rho_mod_u, *c3.conjugator));
            detail = "|Aut| = " + std::to_string(r.automorphism_count) +
                     ", intertwiner found: " + (r.intertwiner_exists ? "yes" : "no") +
                     " (result is independent of the standardizing identification)";
            return !r.intertwiner_exists && r.automorphism_count == 432 && r.group_order == 27;
        });

    // ---------------------------------------------------------------- 11
    suite.criterion(
        11, "cross-oracle classification over the battery and C2 -> C8",
        [&](std::string& detail) {
            FiniteGroup c3 = FiniteGroup::cyclic(3);
            Presentation gamma = fpgroup::gamma_presentation();
            Presentation pol2 = fpgroup::pol2_presentation();
            bool ok = true;
            detail.clear();
            for (auto& entry : polymap::classification_battery()) {
                auto cubic = polymap::classify_unital_polynomial_maps(c3, entry.group, 3);
                auto quad = polymap::classify_unital_polynomial_maps(c3, entry.group, 2);
                auto gamma_tuples = fpgroup::relator_satisfying_tuples(gamma, entry.group);
                auto pol2_tuples = fpgroup::relator_satisfying_tuples(pol2, entry.group);
                std::set<std::pair<int, int>> cubic_pairs, gamma_pairs, quad_pairs, pol2_pairs;
                for (auto& m : cubic) cubic_pairs.insert({m(1), m(2)});
                for (auto& t : gamma_tuples) gamma_pairs.insert({t[0], t[1]});
                for (auto& m : quad) quad_pairs.insert({m(1), m(2)});
                for (auto& t : pol2_tuples) pol2_pairs.insert({t[0], t[1]});
                bool here = cubic_pairs == gamma_pairs && quad_pairs == pol2_pairs;
                ok = ok && here;
                detail += std::string(entry.name) + ": cubic " +
                          std::to_string(cubic.size()) + " quadratic " +
                          std::to_string(quad.size()) + (here ? "; " : " MISMATCH; ");
            }
            auto c2maps = polymap::classify_unital_polynomial_maps(
                FiniteGroup::cyclic(2), FiniteGroup::cyclic(8), 3);
            detail += "C2->C8 cubic " + std::to_string(c2maps.size());
            return ok && c2maps.size() == 8;
        });

    // ---------------------------------------------------------------- 12
    suite.criterion(
        12, "nested commutator witnesses of depth exactly n-1 mod u^n for n = 2, 3, 4",
        [&](std::string& detail) {
            KernelData kd = compute_kernel_data();
            auto words = second_kernel_words(kd.mu_kernel, kd.rho_mod_u);
            auto rho = rho_generators();
            bool ok = true;
            detail.clear();
            for (int n = 2; n <= 4; ++n) {
                NilpotencyWitness w = nilpotency_witness(rho, words, n,
                                                         static_cast<size_t>(cfg.nilpotency_subset));
                bool here = w.depth == n - 1 && w.depth_bound_checked;
                ok = ok && here;
                detail += "n=" + std::to_string(n) + ": depth " + std::to_string(w.depth) +
                          (w.depth_bound_checked ? " (next depth vanishes); " : " UNCHECKED; ");
            }
            // depth-1 abelianness at n = 2: all generator pairs commute mod u^2
            std::vector<Mat3<RatFuncGF3>> mats;
            for (const Word& w : words) mats.push_back(truncate_mod_u(rho.eval(w), 2));
            bool abelian = true;
            for (size_t i = 0; i < mats.size() && abelian; ++i)
                for (size_t j = i + 1; j < mats.size() && abelian; ++j) {
                    auto comm = mats[i] * mats[j] * mats[i].adjugate() * mats[j].adjugate();
                    abelian = truncate_mod_u(comm, 2).is_identity();
                }
            detail += abelian ? "level-1 quotient mod u^2 abelian (all pairs)"
                              : "ABELIANNESS FAILS";
            return ok && abelian;
        });

    // ---------------------------------------------------------------- 13
    suite.criterion(
        13, "property suites, 10^4 randomized cases each, zero failures",
        [&](std::string& detail) {
            std::uniform_int_distribution<int> small(-9, 9);
            std::uniform_int_distribution<int> den(1, 7);
            std::uniform_int_distribution<int> trit(0, 2);
            auto rrat = [&] { return Rat(small(acceptance_rng), den(acceptance_rng)); };
            auto reisen = [&] { return Eisen(rrat(), rrat()); };
            auto rtower = [&] { return TowerElement(reisen(), reisen(), reisen()); };
            auto rpoly = [&] {
                std::vector<GF3> c;
                int deg = 1 + (acceptance_rng() % 4);
                for (int i = 0; i <= deg; ++i) c.push_back(GF3(trit(acceptance_rng)));
                return fields::PolyGF3(std::move(c));
            };
            unsigned long long failures = 0;

            // field axioms in all four scalar domains
            for (int i = 0; i < 10000; ++i) {
                Eisen a = reisen(), b = reisen(), c = reisen();
                if (!(a * (b + c) == a * b + a * c && (a * b) * c == a * (b * c))) ++failures;
                if (!a.is_zero() && !(a * a.inverse() == Eisen::one())) ++failures;
                TowerElement x = rtower(), y = rtower();
                if (!(x * y == y * x)) ++failures;
                if (!x.is_zero() && !(x * x.inverse() == TowerElement::one())) ++failures;
                GF3 g(trit(acceptance_rng)), h(trit(acceptance_rng));
                if (!(g + h == h + g && g * h == h * g)) ++failures;
                fields::PolyGF3 p = rpoly(), q = rpoly();
                RatFuncGF3 f(p, q.is_zero() ? fields::PolyGF3::one() : q);
                if (!f.is_zero() && !(f * f.inverse() == RatFuncGF3::one())) ++failures;
            }

            // homomorphism property of evaluation
            auto rho = rho_generators();
            auto pi = pi_generators();
            for (int i = 0; i < 10000; ++i) {
                Word w1 = random_two_letter_word(6), w2 = random_two_letter_word(6);
                if (!(rho.eval(w1 * w2) == rho.eval(w1) * rho.eval(w2))) ++failures;
            }

            // grading consistency d(w) mod 3 <-> mu(w)
            for (int i = 0; i < 10000; ++i) {
                Word w = random_two_letter_word(12);
                long long d = graded_degree(w);
                if ((((d % 3) + 3) % 3 == 0) != (mu_image(w) == 0)) ++failures;
            }

            // trace 0 of level-1 logs on random kernel words (both sides)
            KernelData kd = compute_kernel_data();
            auto words = second_kernel_words(kd.mu_kernel, kd.rho_mod_u);
            std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
            for (int i = 0; i < 10000; ++i) {
                Word w = words[pick(acceptance_rng)] * words[pick(acceptance_rng)];
                Mat3<RatFuncGF3> m = rho.eval(w);
                if (!level1_log_u(m).trace().is_zero()) ++failures;
                if (i % 50 == 0) {
                    DescendResult dr = descend_and_normalize(pi, w);
                    if (!level1_log_lambda(dr.rep).trace().is_zero()) ++failures;
                }
            }
            detail = "failures=" + std::to_string(failures);
            return failures == 0;
        });

    // ---------------------------------------------------------------- 14
    suite.criterion(
        14, "elementary word searches (best effort) with Steinberg bookkeeping",
        [&](std::string& detail) {
            auto claims = search_all_u_targets(cfg);
            int found = 0, inconclusive = 0;
            bool falsified = false;
            auto rho = rho_generators();
            for (const ClaimRecord& c : claims) {
                if (c.verdict == Verdict::Falsified) falsified = true;
                if (c.key != "search.elementary") continue;
                if (c.verdict == Verdict::Verified) {
                    ++found;
                    // independent re-verification of the recorded word
                    Word w = fpgroup::parse_word(c.witness.at("word").get<std::string>(), kAB);
                    std::string name = c.witness.at("target").get<std::string>();
                    int i = name[1] - '0', j = name[2] - '0', p = name[6] - '0';
                    if (!(rho.eval(w) == elementary_u(i, j, p))) falsified = true;
                } else {
                    ++inconclusive;
                }
            }
            detail = std::to_string(found) + "/12 targets found and re-verified, " +
                     std::to_string(inconclusive) + " inconclusive (allowed)";
            for (const ClaimRecord& c : claims)
                if (c.id == "search.steinberg")
                    detail += "; steinberg: " + std::string(verdict_name(c.verdict));
            return !falsified;
        });

    // ---------------------------------------------------------------- 15
    suite.criterion(
        15, "negative controls: mutations of pi(a), rho(b), and a relator falsify",
        [&](std::string& detail) {
            auto count_falsified = [](const std::vector<ClaimRecord>& claims) {
                int n = 0;
                for (const auto& c : claims)
                    if (c.verdict == Verdict::Falsified) ++n;
                return n;
            };
            int f1 = count_falsified(verify_char0(cfg, Corruption::PiA));
            int f2 = count_falsified(verify_char3(cfg, Corruption::RhoB));
            int f3 = count_falsified(verify_presentation(cfg, Corruption::GammaRelator));
            detail = "falsified claims: pi(a) mutation " + std::to_string(f1) +
                     ", rho(b) mutation " + std::to_string(f2) + ", relator mutation " +
                     std::to_string(f3);
            return f1 >= 1 && f2 >= 1 && f3 >= 1;
        });

    if (suite.failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed (see lines above; criterion 8's mod-u strict set "
                "equality cannot hold: the image is a verified conjugate of the standard "
                "subgroup, matching the isomorphism statement it cites)\n",
                suite.failures);
    return 1;
}
