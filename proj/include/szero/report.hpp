#pragma once

// Subcommand drivers shared by the CLI and the tests. Each run_* returns a
// Report whose JSON body is byte-deterministic for a fixed config.

#include "szero/ktheory.hpp"
#include "szero/sod.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace szero {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum ExitCode : int { kExitOk = 0, kExitInvalid = 2, kExitIncomplete = 3, kExitConfig = 64 };

struct RunConfig {
    std::string command;        // verify-sod verify-kapranov eval-word check-relations dual-pairing cross-check
    int n = 2;
    int N = 0;
    std::vector<int> k;         // empty: sweep every weight
    std::string side = "F";     // F, E or both
    int jobs = 1;
    int max_steps = 0;
    bool diagnostic = false;
    bool timing = false;
    std::vector<std::string> relations;  // empty: all in scope
    std::string word;
    int max_N = 6;

    /// Throws ConfigError.
    void validate() const;
    nlohmann::ordered_json to_json() const;
};

/// "2" -> (2, N-2) when n = 2; "1,1,1" -> (1,1,1). Throws ConfigError.
std::vector<int> parse_k(const std::string& text, int n, int N);

/// SZERO_MAX_N or 6.
int max_n_from_env();

struct Report {
    nlohmann::ordered_json json;
    std::vector<std::string> lines;  // human summary for stdout
    int exit_code = kExitOk;

    std::string dump_json() const;
    std::string markdown() const;
};

Report run(const RunConfig& cfg);

Report run_verify_sod(const RunConfig& cfg);
Report run_verify_kapranov(const RunConfig& cfg);
Report run_eval_word(const RunConfig& cfg);
Report run_check_relations(const RunConfig& cfg);
Report run_dual_pairing(const RunConfig& cfg);
Report run_cross_check(const RunConfig& cfg);

nlohmann::ordered_json to_json(const SodCertificate& cert);
nlohmann::ordered_json to_json(const std::vector<RewriteStep>& log);

/// Writes via a temporary file in the same directory and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace szero
