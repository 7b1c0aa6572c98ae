// szero: SOD certificates, Bott/K-theory oracles and word evaluation from the command line.

#include "szero/report.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

const char* kGrammar = R"TXT(Word grammar (eval-word):
  word    := token* '@' weight [ '[' int ']' ]
  token   := 'F[' i ',' s ']' | 'E[' i ',' r ']' | 'Psi[' ('+'|'-') ',' i ',' e ']'
  weight  := '(' int (',' int)* ')'
Tokens compose right to left: the rightmost token acts first on the weight after '@'.
The optional trailing [m] is a homological shift.
Example: szero eval-word "E[1,-2] F[1,2] @ (0,3)"

Exit codes: 0 ok, 2 invalid or failed check, 3 engine incomplete (Stuck), 64 usage or config error.
SZERO_MAX_N caps N for sweeps (default 6).)TXT";

struct Flags {
    std::string k;
    std::string json_path;
    std::string md_path;
};

void add_common(CLI::App* sub, szero::RunConfig& cfg, Flags& fl) {
    sub->add_option("--n", cfg.n, "number of weight entries (flag length)")->capture_default_str();
    sub->add_option("--N", cfg.N, "total dimension N >= 2");
    sub->add_option("--k", fl.k, "weight: one value k for n=2, or a comma list k1,...,kn; omit to sweep");
    sub->add_option("--side", cfg.side, "F, E or both")->capture_default_str();
    sub->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
    sub->add_option("--max-steps", cfg.max_steps, "rewrite budget per word (0 = 4 L^2)")->capture_default_str();
    sub->add_flag("--diagnostic", cfg.diagnostic, "also run pairs the theory makes no claim about");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"szero: semiorthogonal decomposition certificates from a categorical action"};
    app.footer(kGrammar);
    app.require_subcommand(1);

    szero::RunConfig cfg;
    Flags fl;
    app.add_option("--json", fl.json_path, "write the JSON report to this path");
    app.add_option("--md", fl.md_path, "write a markdown report to this path");
    app.add_flag("--timing", cfg.timing, "include wall time in the report");

    auto* sod = app.add_subcommand("verify-sod", "engine certificates for F-/E-side collections");
    auto* kap = app.add_subcommand("verify-kapranov", "oracle exceptionality of Kapranov collections");
    auto* ev = app.add_subcommand("eval-word", "simplify a word and evaluate it with the oracle");
    auto* rel = app.add_subcommand("check-relations", "decategorified relation sweep on K-theory (n = 2)");
    auto* dual = app.add_subcommand("dual-pairing", "pairing between the V and Q collections (n = 2)");
    auto* cross = app.add_subcommand("cross-check", "engine verdicts against oracle Ext (n = 2)");
    for (auto* s : {sod, kap, rel, dual, cross}) add_common(s, cfg, fl);
    for (auto* s : {sod, kap, ev, rel, dual, cross}) {
        s->add_option("--json", fl.json_path, "write the JSON report to this path");
        s->add_option("--md", fl.md_path, "write a markdown report to this path");
        s->add_flag("--timing", cfg.timing, "include wall time in the report");
    }
    ev->add_option("word", cfg.word, "word to evaluate, see grammar below")->required();
    ev->add_option("--max-steps", cfg.max_steps, "rewrite budget (0 = 4 L^2)");
    ev->footer(kGrammar);
    rel->add_option("--relation", cfg.relations, "relation id (repeatable); default all in scope");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return szero::kExitConfig;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.max_N = szero::max_n_from_env();
        if (!fl.k.empty()) cfg.k = szero::parse_k(fl.k, cfg.n, cfg.N);
    } catch (const szero::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return szero::kExitConfig;
    }

    szero::Report rep;
    try {
        rep = szero::run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return szero::kExitConfig;
    }
    auto& out = rep.exit_code == szero::kExitConfig ? std::cerr : std::cout;
    for (const auto& line : rep.lines) out << line << "\n";
    try {
        if (!fl.json_path.empty()) szero::write_atomic(fl.json_path, rep.dump_json());
        if (!fl.md_path.empty()) szero::write_atomic(fl.md_path, rep.markdown());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return szero::kExitConfig;
    }
    if (rep.exit_code != szero::kExitConfig) std::cout << "status: " << rep.json["status"].get<std::string>() << "\n";
    return rep.exit_code;
}
