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

#ifndef POLCERT_CERTIFICATE_HPP
#define POLCERT_CERTIFICATE_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace polcert::cert {

inline constexpr const char* kToolName = "polcert";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Verdict { Verified, Falsified, Inconclusive, AssumedLemma };

const char* verdict_name(Verdict v);

/// One verified (or falsified, or inconclusive) claim. `key` selects the
/// statement from the built-in claim registry; `id` may carry an instance
/// suffix (e.g. a search target) after the registry key.
struct ClaimRecord {
    std::string id;
    std::string key;
    std::string inputs_digest;
    Verdict verdict = Verdict::Inconclusive;
    nlohmann::json witness;
    double wall_ms = 0.0;
};

/// Registry of claim statements; every record's key must resolve here.
const std::map<std::string, std::string>& claim_registry();
bool registry_has(const std::string& key);

/// Certificate document. The claims block is deterministic byte-for-byte
/// for a fixed tool version and configuration; timestamps and wall-clock
/// timings live only in the unsigned header.
struct Certificate {
    std::string target;
    std::string generated_at;  // RFC 3339 UTC
    nlohmann::json config_echo;
    std::vector<ClaimRecord> claims;

    bool any_falsified() const;
    bool any_inconclusive() const;

    /// Sorted, deterministic claims array (no timing data).
    nlohmann::json claims_json() const;
    nlohmann::json to_json() const;
    std::string to_markdown() const;

    static Certificate from_json(const nlohmann::json& j);
};

/// FNV-1a 64-bit digest, hex-encoded; used for input digests and the
/// claims-block digest in the header.
std::string fnv1a_hex(const std::string& data);

/// Current UTC time, RFC 3339.
std::string utc_timestamp();

}  // namespace polcert::cert

#endif
