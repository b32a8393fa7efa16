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

#ifndef POLCERT_RUNCONFIG_HPP
#define POLCERT_RUNCONFIG_HPP

#include <string>

#include <json.hpp>

namespace polcert::cert {

/// All tunable bounds. Everything is flag- or file-driven; POLCERT_THREADS
/// caps the worker count for concurrent verify targets.
struct RunConfig {
    long coset_limit = 100000;
    unsigned long long hom_guard = 10'000'000;
    unsigned long long classify_guard = 10'000'000;

    int search_max_len = 10;          // half-length when meet-in-the-middle is on
    int search_max_degree = 8;        // u-degree cap (char 3) / coordinate bits (char 0)
    long search_max_nodes = 300000;
    long long search_budget_ms = 15000;
    bool search_meet_in_middle = true;

    int nilpotency_max_n = 4;
    int nilpotency_subset = 8;
    int no_relation_max_len = 10;

    int threads = 1;  // from POLCERT_THREADS when set

    void validate() const;
    nlohmann::json to_json() const;
    static RunConfig from_json(const nlohmann::json& j);
    static RunConfig from_file(const std::string& path);
    /// Defaults with POLCERT_THREADS applied.
    static RunConfig with_env();
};

}  // namespace polcert::cert

#endif
