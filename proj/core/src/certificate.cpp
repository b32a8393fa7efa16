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

#include "polcert/certificate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "polcert/error.hpp"

namespace polcert::cert {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "verified";
        case Verdict::Falsified: return "falsified";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::AssumedLemma: return "assumed-lemma";
    }
    return "?";
}

namespace {

Verdict verdict_from_name(const std::string& s) {
    if (s == "verified") return Verdict::Verified;
    if (s == "falsified") return Verdict::Falsified;
    if (s == "inconclusive") return Verdict::Inconclusive;
    if (s == "assumed-lemma") return Verdict::AssumedLemma;
    fail("unknown verdict: " + s);
}

}  // namespace

const std::map<std::string, std::string>& claim_registry() {
    static const std::map<std::string, std::string> registry = {
        {"pol2.cosets",
         "coset enumeration of <a,b | a^9, b^9, bab^-1a^-4, aba^-1b^-4> over the trivial "
         "subgroup completes with exactly 27 cosets and the table verifies"},
        {"pol2.model",
         "the (Z/3)^2-by-C3 cocycle model has order 27 and satisfies a^2=(e1,s^2), "
         "a^3=(e1+e2,1), b^3=(2e1+2e2,1), a^9=b^9=1, bab^-1=a^4, aba^-1=b^4, psi(s,s^2)=2e1"},
        {"pol2.exponent",
         "the cocycle model has exponent 9 while the unitriangular group of order 27 has "
         "exponent 3"},
        {"pol2.iso",
         "the cocycle model is isomorphic to C9 split by C3 acting by multiplication by 4"},
        {"pol2.not_heisenberg",
         "the cocycle model is not isomorphic to the unitriangular (Heisenberg) group mod 3"},
        {"pol2.universal_degree",
         "the universal map g -> (0, g) into the cocycle model has degree exactly 2"},

        {"pres.abelianization",
         "the cubic group <a,b | (ba)^3, (ab^-1a)^3, [ba,ab^-1a]> abelianizes to invariant "
         "factors [3, 9]"},
        {"pres.derivation",
         "the transcribed equality derivation from the eight quadratic-pair relations "
         "certifies z^3 = w^3 = v^3 = 1, the centrality of z, and the three relators"},
        {"pres.modpow", "4^8 = 65536 is congruent to 7 mod 9"},
        {"pres.derivation_negative",
         "a script claiming z^2 = 1 from the same relations is rejected"},

        {"char0.transcription",
         "the characteristic-0 generator images are exact: every a-entry is an Eisenstein "
         "multiple of r^2 and every b-entry an Eisenstein multiple of r"},
        {"char0.relators",
         "the characteristic-0 images satisfy all three relators projectively (scalar "
         "factors recorded)"},
        {"char0.schreier",
         "the kernel of the tautological map onto C3 has exactly 4 Schreier generators"},
        {"char0.descend",
         "all 4 kernel generators normalize into PSL3(Z[omega]): integral entries, content "
         "1, determinant 1 after unit rescaling"},
        {"char0.kernel_guard",
         "a word of nonzero grading (e.g. the generator a) is rejected by the descent"},
        {"char0.level0",
         "the mod-lambda images of the kernel generators generate a subgroup of order 27 "
         "equal to the standard upper unitriangular subgroup of SL3(F3)"},
        {"char0.schreier82",
         "the kernel of the order-27 level-0 image has exactly 82 Schreier generators"},
        {"char0.level1",
         "the level-1 logarithms of the 82 second-kernel generators span, modulo the "
         "scalar line, a 6-dimensional space equal to the image of {X: X11 = 0, X31 = 0, "
         "X33 = -X22}"},
        {"char0.index",
         "the reconstructed index in PSL3(Z[omega]) is (5616/27) * 3^(7-6) = 624 = "
         "2^4 * 3 * 13 (level-2 fullness assumed from the elementary generation argument)"},

        {"char3.transcription",
         "the characteristic-3 generator images are exact with determinant 1"},
        {"char3.relators", "the characteristic-3 images satisfy all three relators exactly"},
        {"char3.infinite_order",
         "a and b have infinite order (non-constant witness traces over F3(t)); the "
         "finite-order element ba stays inconclusive"},
        {"char3.integrality",
         "the images of the 4 kernel generators have polynomial entries in u = t^3"},
        {"char3.level0",
         "the mod-u images of the kernel generators generate a subgroup of order 27 "
         "isomorphic to the standard unitriangular subgroup (basis change recorded; literal "
         "set equality reported in the witness)"},
        {"char3.level1",
         "the level-1 logarithms of the 82 second-kernel generators span a 7-dimensional "
         "subspace of sl3(F3)"},

        {"remark.common_image",
         "after the recorded basis change both reduction maps land in the same standard "
         "unitriangular subgroup"},
        {"remark.no_intertwiner",
         "no automorphism of the common order-27 image intertwines the mod-lambda and "
         "mod-u reductions on the kernel generators (all automorphisms enumerated)"},

        {"nilp.witness",
         "nested commutators of level-1 elements witness nilpotency class n-1 in the "
         "finite quotient mod u^n"},
        {"nilp.abelian_base",
         "the level-1 quotient mod u^2 is abelian (all generator commutators vanish)"},

        {"classify.count",
         "the number of unital polynomial maps of the requested degree from the cyclic "
         "domain, by exhaustive degree testing"},
        {"classify.cross_oracle",
         "the generator-image pairs of the classified maps coincide with the "
         "relator-satisfying pairs of the matching universal presentation"},

        {"search.elementary",
         "bounded word search for an elementary matrix target over the kernel generators; "
         "found words are re-verified exactly"},
        {"search.check_word",
         "verification-only evaluation of a supplied word against the target"},
        {"search.steinberg",
         "Steinberg commutator identities verified for the elementary targets; congruence "
         "generation certified modulo the Euclidean-domain lemma"},
        {"search.no_relation",
         "bounded enumeration found no nontrivial relation between the given pair up to "
         "the stated length (evidence, not proof)"},
    };
    return registry;
}

bool registry_has(const std::string& key) { return claim_registry().count(key) > 0; }

bool Certificate::any_falsified() const {
    return std::any_of(claims.begin(), claims.end(),
                       [](const ClaimRecord& c) { return c.verdict == Verdict::Falsified; });
}

bool Certificate::any_inconclusive() const {
    return std::any_of(claims.begin(), claims.end(),
                       [](const ClaimRecord& c) { return c.verdict == Verdict::Inconclusive; });
}

nlohmann::json Certificate::claims_json() const {
    std::vector<const ClaimRecord*> sorted;
    for (const auto& c : claims) sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(),
              [](const ClaimRecord* a, const ClaimRecord* b) { return a->id < b->id; });
    nlohmann::json arr = nlohmann::json::array();
    for (const ClaimRecord* c : sorted) {
        require(registry_has(c->key), "claim key not in registry: " + c->key);
        arr.push_back({{"id", c->id},
                       {"key", c->key},
                       {"statement", claim_registry().at(c->key)},
                       {"inputs_digest", c->inputs_digest},
                       {"verdict", verdict_name(c->verdict)},
                       {"witness", c->witness}});
    }
    return arr;
}

nlohmann::json Certificate::to_json() const {
    nlohmann::json claims_block = claims_json();
    nlohmann::json timings = nlohmann::json::object();
    for (const auto& c : claims) timings[c.id] = c.wall_ms;
    return {{"header",
             {{"tool", kToolName},
              {"version", kToolVersion},
              {"generated_at", generated_at},
              {"target", target},
              {"config", config_echo},
              {"wall_ms", timings},
              {"claims_digest", fnv1a_hex(claims_block.dump())}}},
            {"claims", claims_block}};
}

std::string Certificate::to_markdown() const {
    std::ostringstream os;
    os << "# " << kToolName << " certificate: " << target << "\n\n";
    os << "generated " << generated_at << " by " << kToolName << " " << kToolVersion << "\n\n";
    os << "| claim | verdict | statement |\n|---|---|---|\n";
    std::vector<const ClaimRecord*> sorted;
    for (const auto& c : claims) sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(),
              [](const ClaimRecord* a, const ClaimRecord* b) { return a->id < b->id; });
    for (const ClaimRecord* c : sorted)
        os << "| " << c->id << " | " << verdict_name(c->verdict) << " | "
           << claim_registry().at(c->key) << " |\n";
    os << "\n";
    for (const ClaimRecord* c : sorted)
        if (!c->witness.is_null())
            os << "## " << c->id << "\n\n```json\n" << c->witness.dump(2) << "\n```\n\n";
    return os.str();
}

Certificate Certificate::from_json(const nlohmann::json& j) {
    Certificate out;
    out.generated_at = j.at("header").at("generated_at").get<std::string>();
    out.target = j.at("header").at("target").get<std::string>();
    out.config_echo = j.at("header").value("config", nlohmann::json::object());
    for (const auto& c : j.at("claims")) {
        ClaimRecord r;
        r.id = c.at("id").get<std::string>();
        r.key = c.at("key").get<std::string>();
        r.inputs_digest = c.at("inputs_digest").get<std::string>();
        r.verdict = verdict_from_name(c.at("verdict").get<std::string>());
        r.witness = c.value("witness", nlohmann::json());
        out.claims.push_back(std::move(r));
    }
    return out;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace polcert::cert
