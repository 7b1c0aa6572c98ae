#include "szero/sod.hpp"

#include "szero/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace szero {

std::string str(Side s) { return s == Side::F ? "F" : "E"; }

std::string str(CertStatus s) {
    switch (s) {
        case CertStatus::Valid: return "VALID";
        case CertStatus::Invalid: return "INVALID";
        case CertStatus::Incomplete: return "INVALID-INCOMPLETE";
    }
    return "?";
}

WeightVector CollectionSpec::source() const {
    WeightVector w(static_cast<std::size_t>(n), 0);
    if (side == Side::F)
        w.back() = N;
    else
        w.front() = N;
    return w;
}

void CollectionSpec::validate() const {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    if (static_cast<int>(target.size()) != n) throw ArityError("target weight must have n entries");
    if (!is_valid_weight(target, N)) throw std::invalid_argument("target weight " + str(target) + " not in C(n,N)");
    if (side == Side::E && n != 2) throw std::invalid_argument("E-side collections need n = 2");
}

CollectionSpec grassmannian_spec(int k, int N, Side side) { return {2, N, {k, N - k}, side}; }

std::string str(const CollectionIndex& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + t[i].str();
    return out + ")";
}

namespace {

// Boxes P(a_i, b_i) per component.
std::vector<DiagramBox> boxes(const CollectionSpec& spec) {
    if (spec.side == Side::E) return {{spec.target[0], spec.N - spec.target[0]}};
    std::vector<DiagramBox> out;
    int partial = 0;
    for (int i = 1; i < spec.n; ++i) {
        partial += spec.target[static_cast<std::size_t>(i - 1)];
        out.push_back({spec.target[static_cast<std::size_t>(i)], partial});
    }
    return out;
}

}  // namespace

std::vector<CollectionIndex> index_set(const CollectionSpec& spec) {
    spec.validate();
    std::vector<CollectionIndex> out{{}};
    for (const DiagramBox& box : boxes(spec)) {
        std::vector<CollectionIndex> grown;
        for (const auto& prefix : out)
            for (const auto& d : enumerate_P(box)) {
                CollectionIndex t = prefix;
                t.push_back(d);
                grown.push_back(std::move(t));
            }
        out = std::move(grown);
    }
    std::sort(out.begin(), out.end(),
              [](const CollectionIndex& a, const CollectionIndex& b) { return prodlex_compare(a, b) < 0; });
    return out;
}

std::int64_t multinomial(const WeightVector& k) {
    std::int64_t out = 1;
    int total = 0;
    for (int kj : k) {
        total += kj;
        out *= binomial(total, kj);
    }
    return out;
}

Word build_word(const CollectionSpec& spec, const CollectionIndex& t) {
    spec.validate();
    const auto bx = boxes(spec);
    if (t.size() != bx.size()) throw ArityError("tuple arity");
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!t[i].fits(bx[i].a, bx[i].b))
            throw std::invalid_argument(t[i].str() + " not in P(" + std::to_string(bx[i].a) + "," +
                                        std::to_string(bx[i].b) + ")");
    Word w;
    w.domain = spec.source();
    if (spec.side == Side::E) {
        for (int part : t[0].padded(static_cast<std::size_t>(bx[0].b))) w.tokens.push_back(E(1, -part));
        return w;
    }
    for (std::size_t i = 0; i < t.size(); ++i)
        for (int part : t[i].padded(static_cast<std::size_t>(bx[i].b)))
            w.tokens.push_back(F(static_cast<int>(i + 1), part));
    return w;
}

PairRecord hom_verdict(const CollectionSpec& spec, const std::vector<CollectionIndex>& members, std::size_t t,
                       std::size_t u, const VerifyOptions& opts) {
    const Word wt = build_word(spec, members[t]);
    const Word wu = build_word(spec, members[u]);
    PairRecord rec;
    rec.left = t;
    rec.right = u;
    rec.claimed = t <= u;
    SimplifyOptions so;
    so.max_steps = opts.max_steps;
    so.record = opts.record;
    SimplifyResult res = simplify(compose(right_adjoint(wt), wu), so);
    rec.verdict = res.verdict;
    if (opts.record) {
        rec.log = adjoint_log(wt);
        for (auto& s : res.log) {
            rec.log.push_back(std::move(s));
            rec.log.back().step = static_cast<int>(rec.log.size());
        }
        rec.digest = log_digest(rec.log);
    }
    return rec;
}

CertStatus certificate_status(const SodCertificate& cert) {
    bool stuck = false, bad = false;
    auto visit = [&](const PairRecord& r, bool self) {
        if (!r.claimed) return;
        if (r.verdict.kind == Verdict::Kind::Stuck) {
            stuck = true;
            return;
        }
        if (self)
            bad = bad || !(r.verdict == Verdict::iso(0));
        else
            bad = bad || r.verdict.kind != Verdict::Kind::ProvenZero;
    };
    for (const auto& r : cert.self) visit(r, true);
    for (const auto& r : cert.pairs) visit(r, false);
    if (stuck) return CertStatus::Incomplete;
    return bad ? CertStatus::Invalid : CertStatus::Valid;
}

SodCertificate verify_collection(const CollectionSpec& spec, const VerifyOptions& opts) {
    SodCertificate cert;
    cert.spec = spec;
    cert.members = index_set(spec);
    cert.complement = spec.side == Side::F ? "A" + str(spec.target) : "B" + str(spec.target);
    const std::size_t m = cert.members.size();

    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t t = 0; t < m; ++t) jobs.emplace_back(t, t);
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t u = 0; u < m; ++u)
            if (t < u || (opts.diagnostic && t > u)) jobs.emplace_back(t, u);

    std::vector<PairRecord> results(jobs.size());
    parallel_for(jobs.size(), opts.jobs, [&](std::size_t j) {
        results[j] = hom_verdict(spec, cert.members, jobs[j].first, jobs[j].second, opts);
    });
    for (auto& r : results) (r.left == r.right ? cert.self : cert.pairs).push_back(std::move(r));
    cert.status = certificate_status(cert);
    return cert;
}

std::vector<bool> fully_faithful_report(const SodCertificate& cert) {
    std::vector<bool> out(cert.members.size(), false);
    for (const auto& r : cert.self) out[r.left] = r.verdict == Verdict::iso(0);
    return out;
}

}  // namespace szero
