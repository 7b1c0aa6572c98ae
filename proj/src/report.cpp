#include "szero/report.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace szero {

using nlohmann::ordered_json;

namespace {

const std::vector<std::string> kCommands{"verify-sod",      "verify-kapranov", "eval-word",
                                         "check-relations", "dual-pairing",    "cross-check"};

bool known_command(const std::string& c) { return std::find(kCommands.begin(), kCommands.end(), c) != kCommands.end(); }

// All of C(n,N) in lex order.
std::vector<WeightVector> compositions(int n, int N) {
    std::vector<WeightVector> out;
    WeightVector cur;
    auto rec = [&](auto&& self, int left, int slots) -> void {
        if (slots == 1) {
            cur.push_back(left);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur.push_back(v);
            self(self, left - v, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, N, n);
    return out;
}

std::vector<WeightVector> weights(const RunConfig& cfg) {
    if (!cfg.k.empty()) return {cfg.k};
    return compositions(cfg.n, cfg.N);
}

std::vector<Side> sides(const RunConfig& cfg) {
    if (cfg.side == "both") return {Side::F, Side::E};
    return {cfg.side == "E" ? Side::E : Side::F};
}

ordered_json envelope(const RunConfig& cfg) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = cfg.command;
    j["config"] = cfg.to_json();
    j["certificates"] = ordered_json::array();
    j["relations"] = ordered_json::array();
    j["crosschecks"] = ordered_json::array();
    return j;
}

std::string status_name(int exit_code) {
    switch (exit_code) {
        case kExitOk: return "OK";
        case kExitInvalid: return "INVALID";
        case kExitIncomplete: return "INCOMPLETE";
        default: return "CONFIG-ERROR";
    }
}

void finish(Report& r) { r.json["status"] = status_name(r.exit_code); }

// Definitive failures outrank incompleteness.
void worsen(int& code, int by) {
    if (by == kExitInvalid || (by == kExitIncomplete && code == kExitOk)) code = by;
}

}  // namespace

void RunConfig::validate() const {
    if (!known_command(command)) throw ConfigError("unknown command '" + command + "'");
    if (command == "eval-word") {
        if (word.empty()) throw ConfigError("eval-word needs a word");
        return;
    }
    if (n < 2) throw ConfigError("n must be >= 2");
    if (N < 2) throw ConfigError("N must be >= 2");
    if (N > max_N) throw ConfigError("N = " + std::to_string(N) + " exceeds the cap " + std::to_string(max_N));
    if (side != "F" && side != "E" && side != "both") throw ConfigError("side must be F, E or both");
    if (side != "F" && n != 2) throw ConfigError("E-side collections need n = 2");
    if (!k.empty()) {
        if (static_cast<int>(k.size()) != n) throw ConfigError("k must have n entries");
        if (!is_valid_weight(k, N)) throw ConfigError("k = " + str(k) + " is not in C(n,N)");
    }
    if (jobs < 1) throw ConfigError("jobs must be >= 1");
    if (max_steps < 0) throw ConfigError("max-steps must be >= 0");
    if ((command == "check-relations" || command == "dual-pairing" || command == "cross-check") && n != 2)
        throw ConfigError(command + " supports n = 2 only");
    for (const auto& id : relations) {
        if (id == "U02" || id == "U08") throw ConfigError("out of scope: h-generators (" + id + ")");
        if (!relation_in_scope(id)) throw ConfigError("unknown relation " + id);
    }
}

ordered_json RunConfig::to_json() const {
    ordered_json j;
    if (command == "eval-word") {
        j["word"] = word;
        return j;
    }
    j["n"] = n;
    j["N"] = N;
    j["k"] = k.empty() ? ordered_json("all") : ordered_json(k);
    j["side"] = side;
    j["max_steps"] = max_steps;
    j["diagnostic"] = diagnostic;
    if (!relations.empty()) j["relations"] = relations;
    return j;
}

std::vector<int> parse_k(const std::string& text, int n, int N) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ConfigError("bad --k entry '" + item + "'");
        }
        if (used != item.size()) throw ConfigError("bad --k entry '" + item + "'");
        out.push_back(v);
    }
    if (out.size() == 1 && n == 2) out.push_back(N - out[0]);
    if (static_cast<int>(out.size()) != n) throw ConfigError("--k needs n entries");
    return out;
}

int max_n_from_env() {
    const char* v = std::getenv("SZERO_MAX_N");
    if (!v || !*v) return 6;
    try {
        std::size_t used = 0;
        const int x = std::stoi(v, &used);
        if (used == std::string(v).size() && x >= 2) return x;
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("SZERO_MAX_N must be an integer >= 2, got '") + v + "'");
}

std::string Report::dump_json() const { return json.dump(2) + "\n"; }

ordered_json to_json(const std::vector<RewriteStep>& log) {
    ordered_json out = ordered_json::array();
    for (const auto& s : log)
        out.push_back({{"step", s.step}, {"clause", s.clause}, {"before", s.before}, {"after", s.after}});
    return out;
}

namespace {

ordered_json pair_json(const PairRecord& r) {
    return {{"left", r.left},          {"right", r.right}, {"claimed", r.claimed},
            {"verdict", r.verdict.str()}, {"digest", hex64(r.digest)}, {"log", to_json(r.log)}};
}

}  // namespace

ordered_json to_json(const SodCertificate& cert) {
    ordered_json j;
    j["kind"] = "engine";
    j["n"] = cert.spec.n;
    j["N"] = cert.spec.N;
    j["weight"] = cert.spec.target;
    j["side"] = str(cert.spec.side);
    j["complement"] = cert.complement;
    j["status"] = str(cert.status);
    j["members"] = ordered_json::array();
    for (const auto& m : cert.members) j["members"].push_back(str(m));
    j["fully_faithful"] = fully_faithful_report(cert);
    j["self"] = ordered_json::array();
    for (const auto& r : cert.self) j["self"].push_back(pair_json(r));
    j["pairs"] = ordered_json::array();
    for (const auto& r : cert.pairs) j["pairs"].push_back(pair_json(r));
    return j;
}

Report run_verify_sod(const RunConfig& cfg) {
    Report rep;
    rep.json = envelope(cfg);
    VerifyOptions opts;
    opts.jobs = cfg.jobs;
    opts.max_steps = cfg.max_steps;
    opts.diagnostic = cfg.diagnostic;
    for (const auto& k : weights(cfg))
        for (Side side : sides(cfg)) {
            const SodCertificate cert = verify_collection({cfg.n, cfg.N, k, side}, opts);
            rep.json["certificates"].push_back(to_json(cert));
            rep.lines.push_back(str(side) + " " + str(k) + ": " + str(cert.status) + " (" +
                                std::to_string(cert.members.size()) + " members, complement " + cert.complement + ")");
            if (cert.status == CertStatus::Invalid) worsen(rep.exit_code, kExitInvalid);
            if (cert.status == CertStatus::Incomplete) worsen(rep.exit_code, kExitIncomplete);
        }
    return rep;
}

namespace {

// One oracle certificate: members, ext for every self pair and every claimed zero pair.
struct OracleCert {
    ordered_json json;
    bool ok = true;
};

template <class Ext>
OracleCert oracle_cert(const std::string& collection, const WeightVector& k, int N,
                       const std::vector<std::string>& members, bool zero_when_less, bool diagnostic, Ext&& ext) {
    OracleCert c;
    auto& j = c.json;
    j["kind"] = "oracle";
    j["collection"] = collection;
    j["N"] = N;
    j["weight"] = k;
    j["members"] = members;
    j["self"] = ordered_json::array();
    j["pairs"] = ordered_json::array();
    const std::size_t m = members.size();
    for (std::size_t t = 0; t < m; ++t) {
        const GradedDims g = ext(t, t);
        const bool good = g == GradedDims{{0, 1}};
        c.ok = c.ok && good;
        j["self"].push_back({{"left", t}, {"right", t}, {"ext", str(g)}, {"ok", good}});
    }
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t u = 0; u < m; ++u) {
            if (t == u) continue;
            const bool claimed = zero_when_less ? t < u : t > u;
            if (!claimed && !diagnostic) continue;
            const GradedDims g = ext(t, u);
            const bool good = !claimed || g.empty();
            c.ok = c.ok && good;
            j["pairs"].push_back({{"left", t}, {"right", u}, {"claimed", claimed}, {"ext", str(g)}, {"ok", good}});
        }
    j["status"] = c.ok ? "VALID" : "INVALID";
    return c;
}

}  // namespace

Report run_verify_kapranov(const RunConfig& cfg) {
    Report rep;
    rep.json = envelope(cfg);
    auto record = [&](OracleCert c, const std::string& label) {
        rep.lines.push_back(label + ": " + c.json["status"].get<std::string>() + " (" +
                            std::to_string(c.json["members"].size()) + " members)");
        if (!c.ok) worsen(rep.exit_code, kExitInvalid);
        rep.json["certificates"].push_back(std::move(c.json));
    };
    for (const auto& k : weights(cfg)) {
        if (cfg.n == 2) {
            const int kk = k[0], N = cfg.N;
            for (Side side : sides(cfg)) {
                if (side == Side::F) {
                    const auto P = enumerate_P({N - kk, kk});
                    std::vector<std::string> names;
                    for (const auto& d : P) names.push_back(d.str());
                    record(oracle_cert("S_lambda V", k, N, names, true, cfg.diagnostic,
                                       [&](std::size_t t, std::size_t u) { return ext_V(P[t], P[u], kk, N); }),
                           "V " + str(k));
                } else {
                    const auto P = enumerate_P({kk, N - kk});
                    std::vector<std::string> names;
                    for (const auto& d : P) names.push_back(d.str());
                    record(oracle_cert("S_mu Q", k, N, names, false, cfg.diagnostic,
                                       [&](std::size_t t, std::size_t u) { return ext_Q(P[t], P[u], kk, N); }),
                           "Q " + str(k));
                }
            }
            continue;
        }
        const CollectionSpec spec{cfg.n, cfg.N, k, Side::F};
        const auto members = index_set(spec);
        std::vector<std::string> names;
        for (const auto& m : members) names.push_back(str(m));
        record(oracle_cert("flag", k, cfg.N, names, true, cfg.diagnostic,
                           [&](std::size_t t, std::size_t u) { return flag_ext(members[t], members[u], k).dims; }),
               "flag " + str(k));
    }
    return rep;
}

Report run_eval_word(const RunConfig& cfg) {
    Report rep;
    rep.json = envelope(cfg);
    Word w;
    try {
        w = parse_word(cfg.word);
    } catch (const ParseError& e) {
        rep.exit_code = kExitConfig;
        rep.lines.push_back(e.what());
        rep.lines.push_back("  " + cfg.word);
        rep.lines.push_back("  " + std::string(e.position(), ' ') + "^");
        rep.json["error"] = e.what();
        return rep;
    }
    SimplifyOptions so;
    so.max_steps = cfg.max_steps;
    const SimplifyResult res = simplify(w, so);
    const auto oracle = eval_word(w);
    ordered_json ev;
    ev["word"] = w.str();
    ev["verdict"] = res.verdict.str();
    ev["digest"] = hex64(res.digest());
    ev["log"] = to_json(res.log);
    ev["oracle"] = oracle ? ordered_json(oracle->str()) : ordered_json(nullptr);
    rep.json["evaluation"] = ev;
    rep.lines.push_back("word:   " + w.str());
    // A single word has no Hom claim attached, so an irreducible residue is
    // its normal form rather than an engine failure.
    const bool reduced = res.verdict.kind == Verdict::Kind::Stuck;
    if (reduced) rep.json["evaluation"]["normal_form"] = res.verdict.residue.str();
    rep.lines.push_back("engine: " + (reduced ? "normal form " + res.verdict.residue.str() : res.verdict.str()));
    rep.lines.push_back("oracle: " + (oracle ? oracle->str() : std::string("n/a")));
    return rep;
}

Report run_check_relations(const RunConfig& cfg) {
    Report rep;
    rep.json = envelope(cfg);
    const auto ids = cfg.relations.empty() ? relation_ids() : cfg.relations;
    for (const auto& id : ids) {
        const RelationResult r = check_relation(id, cfg.N);
        rep.json["relations"].push_back(
            {{"id", r.id}, {"N", cfg.N}, {"pass", r.pass}, {"checked", r.checked}, {"witness", r.witness}});
        rep.lines.push_back(id + " N=" + std::to_string(cfg.N) + ": " + (r.pass ? "pass" : "FAIL") + " (" +
                            std::to_string(r.checked) + " identities)" + (r.pass ? "" : " first failure " + r.witness));
        if (!r.pass) worsen(rep.exit_code, kExitInvalid);
    }
    return rep;
}

Report run_dual_pairing(const RunConfig& cfg) {
    Report rep;
    rep.json = envelope(cfg);
    ordered_json all = ordered_json::array();
    for (const auto& k : weights(cfg)) {
        const int kk = k[0], N = cfg.N;
        const auto rows = enumerate_P({kk, N - kk});  // mu
        const auto cols = enumerate_P({N - kk, kk});  // lambda
        std::vector<int> row_hits(rows.size(), 0), col_hits(cols.size(), 0);
        bool unit = true;
        ordered_json entries = ordered_json::array();
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b) {
                const GradedDims g = dual_pairing(rows[a], cols[b], kk, N);
                if (g.empty()) continue;
                ++row_hits[a];
                ++col_hits[b];
                unit = unit && g == GradedDims{{0, 1}};
                entries.push_back({{"mu", rows[a].str()}, {"lambda", cols[b].str()}, {"ext", str(g)}});
            }
        bool bijection = unit && rows.size() == cols.size();
        for (int h : row_hits) bijection = bijection && h == 1;
        for (int h : col_hits) bijection = bijection && h == 1;
        all.push_back({{"weight", k}, {"bijection", bijection}, {"support", entries}});
        rep.lines.push_back("dual pairing " + str(k) + ": " + (bijection ? "delta pattern" : "NOT a bijection") + " (" +
                            std::to_string(entries.size()) + " nonzero of " +
                            std::to_string(rows.size() * cols.size()) + ")");
        if (!bijection) worsen(rep.exit_code, kExitInvalid);
    }
    rep.json["pairings"] = all;
    return rep;
}

Report run_cross_check(const RunConfig& cfg) {
    Report rep;
    rep.json = envelope(cfg);
    for (const auto& k : weights(cfg)) {
        const int kk = k[0], N = cfg.N;
        for (Side side : sides(cfg)) {
            const auto P = side == Side::F ? enumerate_P({N - kk, kk}) : enumerate_P({kk, N - kk});
            std::size_t agree = 0, incomplete = 0, mismatch = 0;
            for (std::size_t t = 0; t < P.size(); ++t)
                for (std::size_t u = 0; u < P.size(); ++u) {
                    const bool claimed = t <= u;
                    if (!claimed && !cfg.diagnostic) continue;
                    const CrossCheck c = side == Side::F ? cross_check(P[t], P[u], kk, N) : cross_check_E(P[t], P[u], kk, N);
                    switch (c.status) {
                        case CrossCheck::Status::Agree: ++agree; break;
                        case CrossCheck::Status::Mismatch: ++mismatch; worsen(rep.exit_code, kExitInvalid); break;
                        case CrossCheck::Status::EngineIncomplete:
                            ++incomplete;
                            if (claimed) worsen(rep.exit_code, kExitIncomplete);
                            break;
                    }
                    rep.json["crosschecks"].push_back({{"side", str(side)},
                                                       {"weight", k},
                                                       {"left", P[t].str()},
                                                       {"right", P[u].str()},
                                                       {"claimed", claimed},
                                                       {"status", c.str()},
                                                       {"verdict", c.verdict.str()},
                                                       {"ext", str(c.ext)}});
                }
            rep.lines.push_back("cross-check " + str(side) + " " + str(k) + ": " + std::to_string(agree) + " agree, " +
                                std::to_string(mismatch) + " mismatch, " + std::to_string(incomplete) +
                                " engine-incomplete");
        }
    }
    return rep;
}

Report run(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        rep.json = envelope(cfg);
        rep.exit_code = kExitConfig;
        rep.json["error"] = e.what();
        rep.lines.push_back(std::string("config error: ") + e.what());
        finish(rep);
        return rep;
    }
    if (cfg.command == "verify-sod") rep = run_verify_sod(cfg);
    else if (cfg.command == "verify-kapranov") rep = run_verify_kapranov(cfg);
    else if (cfg.command == "eval-word") rep = run_eval_word(cfg);
    else if (cfg.command == "check-relations") rep = run_check_relations(cfg);
    else if (cfg.command == "dual-pairing") rep = run_dual_pairing(cfg);
    else rep = run_cross_check(cfg);
    finish(rep);
    if (cfg.timing) {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rep.json["timing"] = {{"seconds", secs}};
        std::ostringstream os;
        os.precision(3);
        os << std::fixed << "elapsed " << secs << " s";
        rep.lines.push_back(os.str());
    }
    return rep;
}

std::string Report::markdown() const {
    std::ostringstream os;
    os << "# szero " << json.value("command", std::string("report")) << "\n\n";
    os << "Status: **" << json.value("status", std::string("?")) << "**\n\n";
    os << "Config: `" << json["config"].dump() << "`\n\n";
    if (json.contains("error")) os << "Error: " << json["error"].get<std::string>() << "\n\n";
    if (!json["certificates"].empty()) {
        os << "## Certificates\n\n| kind | weight | side | members | status |\n|---|---|---|---|---|\n";
        for (const auto& c : json["certificates"]) {
            const std::string side = c.contains("side") ? c["side"].get<std::string>() : c["collection"].get<std::string>();
            os << "| " << c["kind"].get<std::string>() << " | " << c["weight"].dump() << " | " << side << " | "
               << c["members"].size() << " | " << c["status"].get<std::string>() << " |\n";
        }
        os << "\n";
    }
    if (!json["relations"].empty()) {
        os << "## Relations\n\n| id | N | checked | result | witness |\n|---|---|---|---|---|\n";
        for (const auto& r : json["relations"])
            os << "| " << r["id"].get<std::string>() << " | " << r["N"] << " | " << r["checked"] << " | "
               << (r["pass"].get<bool>() ? "pass" : "FAIL") << " | " << r["witness"].get<std::string>() << " |\n";
        os << "\n";
    }
    if (!json["crosschecks"].empty()) {
        os << "## Cross-checks\n\n| side | weight | left | right | verdict | ext | status |\n|---|---|---|---|---|---|---|\n";
        for (const auto& c : json["crosschecks"])
            os << "| " << c["side"].get<std::string>() << " | " << c["weight"].dump() << " | "
               << c["left"].get<std::string>() << " | " << c["right"].get<std::string>() << " | "
               << c["verdict"].get<std::string>() << " | " << c["ext"].get<std::string>() << " | "
               << c["status"].get<std::string>() << " |\n";
        os << "\n";
    }
    if (json.contains("pairings")) {
        os << "## Dual pairing\n\n";
        for (const auto& p : json["pairings"]) {
            os << "### " << p["weight"].dump() << (p["bijection"].get<bool>() ? " (bijection)" : " (NOT a bijection)")
               << "\n\n| mu | lambda | ext |\n|---|---|---|\n";
            for (const auto& e : p["support"])
                os << "| " << e["mu"].get<std::string>() << " | " << e["lambda"].get<std::string>() << " | "
                   << e["ext"].get<std::string>() << " |\n";
            os << "\n";
        }
    }
    if (json.contains("evaluation")) {
        const auto& e = json["evaluation"];
        os << "## Evaluation\n\n- word: `" << e["word"].get<std::string>() << "`\n- engine: "
           << e["verdict"].get<std::string>() << "\n- oracle: "
           << (e["oracle"].is_null() ? std::string("n/a") : e["oracle"].get<std::string>()) << "\n\n";
        os << "| step | clause | before | after |\n|---|---|---|---|\n";
        for (const auto& s : e["log"])
            os << "| " << s["step"] << " | " << s["clause"].get<std::string>() << " | `" << s["before"].get<std::string>()
               << "` | `" << s["after"].get<std::string>() << "` |\n";
        os << "\n";
    }
    if (json.contains("timing")) os << "Elapsed: " << json["timing"]["seconds"].get<double>() << " s\n";
    return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot rename into " + path + ": " + ec.message());
    }
}

}  // namespace szero
