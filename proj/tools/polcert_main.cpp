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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "polcert/finite_group.hpp"
#include "polcert/pipelines.hpp"

namespace {

using polcert::cert::Certificate;
using polcert::cert::ClaimRecord;
using polcert::cert::Corruption;
using polcert::cert::RunConfig;
using polcert::cert::Verdict;

// exit codes: 0 all verified, 2 some claim falsified, 3 inconclusive only
constexpr int kExitFalsified = 2;
constexpr int kExitInconclusive = 3;

int finish(Certificate& cert, const std::string& out_path, bool quiet) {
    nlohmann::json doc = cert.to_json();
    if (out_path.empty() || out_path == "-") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 1;
        }
        out << doc.dump(2) << "\n";
        if (!quiet) {
            for (const ClaimRecord& c : cert.claims)
                std::cerr << "  [" << polcert::cert::verdict_name(c.verdict) << "] " << c.id
                          << "\n";
            std::cerr << "certificate written to " << out_path << "\n";
        }
    }
    if (cert.any_falsified()) return kExitFalsified;
    if (cert.any_inconclusive()) return kExitInconclusive;
    return 0;
}

RunConfig load_config(const std::string& path) {
    return path.empty() ? RunConfig::with_env() : RunConfig::from_file(path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "polcert: exact certificates for the structure of unital polynomial maps from C3\n"
        "(quadratic and cubic universal groups, their matrix representations, and the\n"
        "associated congruence-level analysis)"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    app.add_option("--config", config_path, "JSON config file with bounds and guards")
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_path, "certificate output path (default: stdout)");

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "run a verification pipeline");
    verify->fallthrough();
    std::string target = "all";
    verify->add_option("target", target, "pol2|presentation|char0|char3|remark|nilpotency|all")
        ->required();
    std::string corrupt;
    verify->add_option("--corrupt", corrupt,
                       "negative control: mutate one input (pi_a|rho_b|relator)")
        ->check(CLI::IsMember({"pi_a", "rho_b", "relator"}));

    // --- classify ---
    auto* classify = app.add_subcommand("classify", "classify unital polynomial maps");
    classify->fallthrough();
    std::string group_file;
    int degree = 3;
    std::string domain = "c3";
    classify->add_option("--group", group_file, "group file (order/table or perm format)")
        ->required()
        ->check(CLI::ExistingFile);
    classify->add_option("--degree", degree, "polynomial degree bound")->required();
    classify->add_option("--domain", domain, "domain group: c2 or c3")
        ->check(CLI::IsMember({"c2", "c3"}));

    // --- search ---
    auto* search = app.add_subcommand("search", "bounded elementary-matrix word search");
    search->fallthrough();
    int characteristic = 3;
    std::string target_spec = "all";
    std::string check_word;
    int max_len = -1, max_degree = -1;
    long long budget_ms = -1;
    search->add_option("--char", characteristic, "characteristic: 0 or 3")
        ->check(CLI::IsMember({0, 3}));
    search->add_option("--target", target_spec,
                       "E<i><j>:u^<k> (char 3), E<i><j>:3 or E<i><j>:3w (char 0), identity, "
                       "or 'all' (char 3 base targets)");
    search->add_option("--check-word", check_word, "verify this word instead of searching");
    search->add_option("--max-len", max_len, "word length bound (per side with MITM)");
    search->add_option("--max-degree", max_degree, "entry size bound");
    search->add_option("--budget-ms", budget_ms, "time budget in milliseconds");

    // --- no-relation ---
    auto* norel = app.add_subcommand("no-relation",
                                     "bounded no-relation evidence for a pair of words");
    norel->fallthrough();
    std::string xw = "a*b^-1", yw = "b*a^-1";
    int norel_len = -1;
    norel->add_option("--x", xw, "first word (in a, b)");
    norel->add_option("--y", yw, "second word (in a, b)");
    norel->add_option("--max-len", norel_len, "length bound");

    // --- report ---
    auto* report = app.add_subcommand("report", "render a certificate");
    report->fallthrough();
    std::string in_path, format = "markdown";
    report->add_option("--in", in_path, "certificate JSON")->required()->check(CLI::ExistingFile);
    report->add_option("--format", format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            Corruption c = Corruption::None;
            if (corrupt == "pi_a") c = Corruption::PiA;
            if (corrupt == "rho_b") c = Corruption::RhoB;
            if (corrupt == "relator") c = Corruption::GammaRelator;
            Certificate cert = polcert::cert::run_verify(target, load_config(config_path), c);
            return finish(cert, out_path, false);
        }
        if (*classify) {
            std::ifstream in(group_file);
            polcert::polymap::FiniteGroup h = polcert::polymap::FiniteGroup::parse(in);
            Certificate cert;
            cert.target = "classify";
            cert.generated_at = polcert::cert::utc_timestamp();
            RunConfig cfg = load_config(config_path);
            cert.config_echo = cfg.to_json();
            cert.claims = polcert::cert::classify_pipeline(cfg, h, group_file, degree,
                                                           domain == "c2");
            return finish(cert, out_path, false);
        }
        if (*search) {
            RunConfig cfg = load_config(config_path);
            if (max_len > 0) cfg.search_max_len = max_len;
            if (max_degree > 0) cfg.search_max_degree = max_degree;
            if (budget_ms > 0) cfg.search_budget_ms = budget_ms;
            Certificate cert;
            cert.target = "search";
            cert.generated_at = polcert::cert::utc_timestamp();
            cert.config_echo = cfg.to_json();
            if (target_spec == "all")
                cert.claims = polcert::cert::search_all_u_targets(cfg);
            else
                cert.claims =
                    polcert::cert::search_pipeline(cfg, characteristic, target_spec, check_word);
            return finish(cert, out_path, false);
        }
        if (*norel) {
            RunConfig cfg = load_config(config_path);
            if (norel_len > 0) cfg.no_relation_max_len = norel_len;
            Certificate cert;
            cert.target = "no-relation";
            cert.generated_at = polcert::cert::utc_timestamp();
            cert.config_echo = cfg.to_json();
            cert.claims = polcert::cert::no_relation_pipeline(cfg, xw, yw);
            return finish(cert, out_path, false);
        }
        if (*report) {
            std::ifstream in(in_path);
            nlohmann::json j;
            in >> j;
            Certificate cert = Certificate::from_json(j);
            if (format == "json")
                std::cout << cert.to_json().dump(2) << "\n";
            else
                std::cout << cert.to_markdown();
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
