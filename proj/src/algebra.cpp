#include "szero/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace szero {

bool is_valid_weight(const WeightVector& k, int N) {
    return std::all_of(k.begin(), k.end(), [](int x) { return x >= 0; }) && weight_total(k) == N;
}

int weight_total(const WeightVector& k) { return std::accumulate(k.begin(), k.end(), 0); }

WeightVector shift_by_root(const WeightVector& k, int color, int sign) {
    if (color < 1 || color >= static_cast<int>(k.size())) throw std::out_of_range("color out of range");
    WeightVector out = k;
    out[color - 1] -= sign;
    out[color] += sign;
    return out;
}

std::string str(const WeightVector& k) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << ')';
    return os.str();
}

GenToken E(int color, int r) { return {TokenKind::E, color, r}; }
GenToken F(int color, int s) { return {TokenKind::F, color, s}; }
GenToken PsiPlus(int color, int e) { return {TokenKind::PsiPlus, color, e}; }
GenToken PsiMinus(int color, int e) { return {TokenKind::PsiMinus, color, e}; }

std::string GenToken::str() const {
    const std::string ci = std::to_string(color) + "," + std::to_string(index) + "]";
    switch (kind) {
        case TokenKind::E: return "E[" + ci;
        case TokenKind::F: return "F[" + ci;
        case TokenKind::PsiPlus: return "Psi[+," + ci;
        case TokenKind::PsiMinus: return "Psi[-," + ci;
    }
    return "?";
}

std::string Word::str() const {
    std::string out;
    for (const auto& t : tokens) out += t.str() + " ";
    out += "@ " + szero::str(domain);
    if (shift != 0) out += " [" + std::to_string(shift) + "]";
    return out;
}

std::string str(const FunctorExpr& e) {
    if (std::holds_alternative<ZeroExpr>(e)) return "0";
    if (const auto* w = std::get_if<Word>(&e)) return w->str();
    const auto& f = *std::get<std::shared_ptr<const Filtered>>(e);
    return "{" + f.a.str() + " -> " + f.b.str() + " -> " + f.c.str() + "; target " + f.target + "}";
}

Word compose(const Word& outer, const Word& inner) {
    Word out;
    out.tokens = outer.tokens;
    out.tokens.insert(out.tokens.end(), inner.tokens.begin(), inner.tokens.end());
    out.domain = inner.domain;
    out.shift = outer.shift + inner.shift;
    return out;
}

std::optional<std::vector<WeightVector>> weight_flow(const Word& w) {
    const int N = w.N();
    const std::size_t m = w.tokens.size();
    std::vector<WeightVector> out(m + 1);
    out[m] = w.domain;
    if (!is_valid_weight(w.domain, N)) return std::nullopt;
    for (std::size_t j = m; j-- > 0;) {
        const GenToken& t = w.tokens[j];
        if (t.color < 1 || t.color >= static_cast<int>(w.domain.size())) throw std::out_of_range("color out of range");
        switch (t.kind) {
            case TokenKind::E: out[j] = shift_by_root(out[j + 1], t.color, +1); break;
            case TokenKind::F: out[j] = shift_by_root(out[j + 1], t.color, -1); break;
            default: out[j] = out[j + 1];
        }
        if (!is_valid_weight(out[j], N)) return std::nullopt;
    }
    return out;
}

Word canonical(Word w) {
    std::vector<GenToken> out;
    for (const auto& t : w.tokens) {
        if (t.is_psi() && !out.empty() && out.back().kind == t.kind && out.back().color == t.color) {
            out.back().index += t.index;
            if (out.back().index == 0) out.pop_back();
            continue;
        }
        if (t.is_psi() && t.index == 0) continue;
        out.push_back(t);
    }
    w.tokens = std::move(out);
    return w;
}

namespace {

struct Adjoint {
    std::vector<GenToken> tokens;
    int shift = 0;
    const char* clause = nullptr;
};

// k is the source weight of t.
Adjoint token_adjoint(const GenToken& t, const WeightVector& k) {
    const int i = t.color;
    switch (t.kind) {
        case TokenKind::E: {
            const int r = t.index;
            return {{PsiPlus(i, r + 1), F(i, k[i] + 2), PsiPlus(i, -r - 2)}, -r - 1, "4a"};
        }
        case TokenKind::F: {
            const int s = t.index;
            return {{PsiMinus(i, -s + 1), E(i, -k[i - 1] - 2), PsiMinus(i, s - 2)}, s - 1, "4b"};
        }
        default: {
            GenToken inv = t;
            inv.index = -t.index;
            return {{inv}, 0, nullptr};
        }
    }
}

}  // namespace

Word right_adjoint(const Word& w) {
    const auto flow = weight_flow(w);
    if (!flow) throw std::invalid_argument("zero weight in flow");
    Word out;
    out.domain = flow->front();
    out.shift = -w.shift;
    for (std::size_t j = w.tokens.size(); j-- > 0;) {
        const Adjoint a = token_adjoint(w.tokens[j], (*flow)[j + 1]);
        out.tokens.insert(out.tokens.end(), a.tokens.begin(), a.tokens.end());
        out.shift += a.shift;
    }
    return canonical(std::move(out));
}

std::vector<RewriteStep> adjoint_log(const Word& w) {
    const auto flow = weight_flow(w);
    if (!flow) throw std::invalid_argument("zero weight in flow");
    std::vector<RewriteStep> out;
    for (std::size_t j = w.tokens.size(); j-- > 0;) {
        const Adjoint a = token_adjoint(w.tokens[j], (*flow)[j + 1]);
        if (!a.clause) continue;
        Word before{{w.tokens[j]}, (*flow)[j + 1], 0};
        Word after{a.tokens, (*flow)[j], a.shift};
        out.push_back({0, a.clause, "R(" + before.str() + ")", after.str()});
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i].step = static_cast<int>(i + 1);
    return out;
}

namespace {

// Psi^e immediately left of a letter: returns the letter with updated index and the shift.
std::pair<GenToken, int> pass_psi(const GenToken& psi, const GenToken& letter) {
    const int e = psi.index;
    const int sign = psi.kind == TokenKind::PsiPlus ? 1 : -1;
    GenToken out = letter;
    if (letter.kind == TokenKind::E) {
        out.index += e;
        return {out, -sign * e};
    }
    out.index -= e;
    return {out, sign * e};
}

enum class Rule { None, Swap, TriPlus, TriMinus };

// Rule for an adjacent same-color pair of opposite letters with source weight k.
Rule pair_rule(const GenToken& left, const GenToken& right, const WeightVector& k) {
    const int i = left.color;
    const int rs = left.index + right.index;
    const int ki = k[i - 1], ki1 = k[i];
    if (-ki + 1 <= rs && rs <= ki1 - 1) return Rule::Swap;
    if (rs == ki1) return Rule::TriPlus;
    if (rs == -ki) return Rule::TriMinus;
    return Rule::None;
}

bool opposite_pair(const GenToken& a, const GenToken& b) {
    return a.is_letter() && b.is_letter() && a.color == b.color && a.kind != b.kind;
}

// Members of the triangle for the pair at p, built in the context of w.
std::shared_ptr<const Filtered> make_triangle(const Word& w, std::size_t p, Rule rule) {
    const GenToken& left = w.tokens[p];
    const GenToken& right = w.tokens[p + 1];
    Word swapped = w;
    std::swap(swapped.tokens[p], swapped.tokens[p + 1]);
    Word psi = w;
    psi.tokens.erase(psi.tokens.begin() + static_cast<std::ptrdiff_t>(p),
                     psi.tokens.begin() + static_cast<std::ptrdiff_t>(p) + 2);
    psi.tokens.insert(psi.tokens.begin() + static_cast<std::ptrdiff_t>(p),
                      rule == Rule::TriPlus ? PsiPlus(left.color, 1) : PsiMinus(left.color, 1));
    const bool ef = left.kind == TokenKind::E && right.kind == TokenKind::F;
    const Word& as_ef = ef ? w : swapped;
    const Word& as_fe = ef ? swapped : w;
    auto f = std::make_shared<Filtered>();
    if (rule == Rule::TriPlus) {
        // F E -> E F -> Psi^+
        f->a = as_fe;
        f->b = as_ef;
        f->target = ef ? 'B' : 'A';
    } else {
        // E F -> F E -> Psi^-
        f->a = as_ef;
        f->b = as_fe;
        f->target = ef ? 'A' : 'B';
    }
    f->c = psi;
    return f;
}

}  // namespace

Word push_psi_right(const Word& w0) {
    Word w = canonical(w0);
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t p = 0; p + 1 < w.tokens.size(); ++p) {
            const GenToken& a = w.tokens[p];
            const GenToken& b = w.tokens[p + 1];
            if (a.is_psi() && b.is_letter() && a.color == b.color) {
                auto [letter, s] = pass_psi(a, b);
                w.tokens[p + 1] = a;
                w.tokens[p] = letter;
                w.shift += s;
                moved = true;
            }
        }
        w = canonical(std::move(w));
    }
    return w;
}

FunctorExpr ef_step(const Word& w) {
    const auto flow = weight_flow(w);
    if (!flow) return ZeroExpr{};
    for (std::size_t p = w.tokens.size(); p-- > 1;) {
        const std::size_t q = p - 1;
        if (!opposite_pair(w.tokens[q], w.tokens[p])) continue;
        const Rule rule = pair_rule(w.tokens[q], w.tokens[p], (*flow)[p + 1]);
        if (rule == Rule::None) return w;
        if (rule == Rule::Swap) {
            Word out = w;
            std::swap(out.tokens[q], out.tokens[p]);
            return out;
        }
        return make_triangle(w, q, rule);
    }
    return w;
}

std::string Verdict::str() const {
    switch (kind) {
        case Kind::IsoIdentity: return "IsoIdentity(" + std::to_string(shift) + ")";
        case Kind::ProvenZero: return "ProvenZero";
        case Kind::Stuck: return "Stuck(" + residue.str() + ")";
    }
    return "?";
}

std::uint64_t log_digest(const std::vector<RewriteStep>& log) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= 0xff;
        h *= 1099511628211ULL;
    };
    for (const auto& s : log) {
        feed(std::to_string(s.step));
        feed(s.clause);
        feed(s.before);
        feed(s.after);
    }
    return h;
}

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

std::uint64_t SimplifyResult::digest() const { return log_digest(log); }

namespace {

constexpr int kMaxDepth = 64;

class Engine {
public:
    Engine(const SimplifyOptions& opts, TokenKind mobile) : opts_(opts), mobile_(mobile) {}

    Verdict run(Word w, std::vector<RewriteStep>& log, int depth) {
        if (depth > kMaxDepth) return Verdict::stuck(w);
        const int len = std::max<int>(1, static_cast<int>(w.tokens.size()));
        const int budget = opts_.max_steps > 0 ? opts_.max_steps : 4 * len * len;
        for (int steps = 0;; ++steps) {
            auto flow = weight_flow(w);
            if (!flow) {
                note(log, "weight-zero", w.str(), "0");
                return Verdict::zero();
            }
            Word c = canonical(w);
            if (c != w) {
                note(log, "U03", w.str(), c.str());
                w = std::move(c);
                flow = weight_flow(w);
            }
            if (w.tokens.empty()) return Verdict::iso(w.shift);
            if (steps >= budget) return Verdict::stuck(w);

            std::vector<Site> sites = eligible(w, *flow);
            if (opts_.rng) std::shuffle(sites.begin(), sites.end(), *opts_.rng);
            bool progressed = false;
            for (const Site& s : sites) {
                if (auto next = apply(w, s, log, depth)) {
                    w = std::move(*next);
                    progressed = true;
                    break;
                }
            }
            if (!progressed) return Verdict::stuck(w);
        }
    }

private:
    struct Site {
        std::size_t p;
        bool push;
        Rule rule;
    };

    bool is_mobile(const GenToken& t) const { return t.kind == mobile_; }

    std::vector<Site> eligible(const Word& w, const std::vector<WeightVector>& flow) const {
        std::vector<Site> out;
        for (std::size_t p = w.tokens.size() - 1; p-- > 0;) {
            const GenToken& a = w.tokens[p];
            const GenToken& b = w.tokens[p + 1];
            if (!b.is_letter() || is_mobile(b) || a.color != b.color) continue;
            if (a.is_psi()) {
                // Only when a mobile letter of the same color waits on the left.
                std::size_t q = p;
                while (q > 0 && w.tokens[q - 1].is_psi() && w.tokens[q - 1].color == a.color) --q;
                if (q > 0 && is_mobile(w.tokens[q - 1]) && w.tokens[q - 1].color == a.color)
                    out.push_back({p, true, Rule::None});
            } else if (is_mobile(a)) {
                const Rule r = pair_rule(a, b, flow[p + 2]);
                if (r != Rule::None) out.push_back({p, false, r});
            }
        }
        return out;
    }

    std::optional<Word> apply(const Word& w, const Site& s, std::vector<RewriteStep>& log, int depth) {
        Word out = w;
        if (s.push) {
            auto [letter, shift] = pass_psi(w.tokens[s.p], w.tokens[s.p + 1]);
            out.tokens[s.p] = letter;
            out.tokens[s.p + 1] = w.tokens[s.p];
            out.shift += shift;
            note(log, letter.kind == TokenKind::E ? "5a" : "5b", w.str(), out.str());
            return out;
        }
        if (s.rule == Rule::Swap) {
            std::swap(out.tokens[s.p], out.tokens[s.p + 1]);
            note(log, "6c", w.str(), out.str());
            return out;
        }
        auto tri = make_triangle(w, s.p, s.rule);
        const char* clause = s.rule == Rule::TriPlus ? "6a" : "6b";
        std::vector<RewriteStep> sub;
        auto next = resolve(*tri, sub, depth);
        if (!next) return std::nullopt;
        log.insert(log.end(), sub.begin(), sub.end());
        note(log, clause, w.str(), next->str());
        return next;
    }

    bool vanishes(const Word& w, std::vector<RewriteStep>& sub, int depth) {
        std::vector<RewriteStep> tmp;
        const Verdict v = run(w, tmp, depth + 1);
        if (v.kind != Verdict::Kind::ProvenZero) return false;
        sub.insert(sub.end(), tmp.begin(), tmp.end());
        return true;
    }

    std::optional<Word> resolve(const Filtered& t, std::vector<RewriteStep>& sub, int depth) {
        auto shifted = [](Word w, int d) {
            w.shift += d;
            return w;
        };
        switch (t.target) {
            case 'A':
                if (vanishes(t.b, sub, depth)) return shifted(t.c, -1);
                if (vanishes(t.c, sub, depth)) return t.b;
                return std::nullopt;
            case 'B':
                if (vanishes(t.a, sub, depth)) return t.c;
                if (vanishes(t.c, sub, depth)) return t.a;
                return std::nullopt;
            default:
                if (vanishes(t.a, sub, depth)) return t.b;
                if (vanishes(t.b, sub, depth)) return shifted(t.a, 1);
                return std::nullopt;
        }
    }

    void note(std::vector<RewriteStep>& log, const char* clause, std::string before, std::string after) const {
        if (opts_.record) log.push_back({0, clause, std::move(before), std::move(after)});
    }

    const SimplifyOptions& opts_;
    TokenKind mobile_;
};

TokenKind mobile_kind(const Word& w) {
    for (const auto& t : w.tokens)
        if (t.is_letter()) return t.kind;
    return TokenKind::E;
}

void renumber(std::vector<RewriteStep>& log) {
    for (std::size_t i = 0; i < log.size(); ++i) log[i].step = static_cast<int>(i + 1);
}

}  // namespace

SimplifyResult simplify(const Word& w, const SimplifyOptions& opts) {
    SimplifyResult out;
    Engine engine(opts, mobile_kind(w));
    out.verdict = engine.run(w, out.log, 0);
    renumber(out.log);
    return out;
}

SimplifyResult simplify(const FunctorExpr& e, const SimplifyOptions& opts) {
    if (std::holds_alternative<ZeroExpr>(e)) return {Verdict::zero(), {}};
    if (const auto* w = std::get_if<Word>(&e)) return simplify(*w, opts);
    const Filtered& t = *std::get<std::shared_ptr<const Filtered>>(e);
    // Resolve the triangle at the top level, then simplify the surviving member.
    const Word* members[3] = {&t.a, &t.b, &t.c};
    const int target = t.target - 'A';
    SimplifyResult res[3];
    for (int j = 0; j < 3; ++j)
        if (j != target) res[j] = simplify(*members[j], opts);
    auto zero = [&](int j) { return res[j].verdict.kind == Verdict::Kind::ProvenZero; };
    auto take = [&](int j, int extra) {
        SimplifyResult r = j == target ? simplify(*members[j], opts) : res[j];
        if (r.verdict.kind == Verdict::Kind::IsoIdentity) r.verdict.shift += extra;
        return r;
    };
    const int o1 = (target + 1) % 3, o2 = (target + 2) % 3;
    // A -> B -> C: a zero neighbour identifies the other two up to the rotation shift.
    if (zero(o1)) return take(o2, target == 0 ? -1 : 0);
    if (zero(o2)) return take(o1, target == 2 ? 1 : 0);
    return {Verdict::stuck(*members[target]), {}};
}

Word vanishing_lemma_word(const YoungDiagram& lambda, int i, int k, int N) {
    if (!lambda.fits(N - k, k)) throw std::invalid_argument(lambda.str() + " not in P(a,b)");
    if (i < 2 || i > k) throw std::invalid_argument("vanishing lemma needs 2 <= i <= k");
    auto lam = [&](int j) { return lambda[static_cast<std::size_t>(j - 1)]; };
    Word w;
    w.domain = {k - i, N - k + i};
    w.tokens.push_back(PsiMinus(1, -lam(k) + 1));
    // E_{-2} (Psi^-)^{lam_k - lam_{k-1} - 1} E_{-3} ... E_{-(k-i+2)} (Psi^-)^{lam_i - lam_{i-1} - 1}
    for (int j = 2; j <= k - i + 2; ++j) {
        w.tokens.push_back(E(1, -j));
        const int hi = k - j + 2;
        w.tokens.push_back(PsiMinus(1, lam(hi) - lam(hi - 1) - 1));
    }
    w.tokens.push_back(F(1, 2));
    return canonical(std::move(w));
}

SimplifyResult vanishing_lemma_check(const YoungDiagram& lambda, int i, int k, int N) {
    return simplify(vanishing_lemma_word(lambda, i, k, N));
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Word parse() {
        Word w;
        skip();
        while (peek() != '@' && pos_ < s_.size()) w.tokens.push_back(token());
        expect('@');
        expect('(');
        w.domain.push_back(integer());
        while (peek() == ',') {
            ++pos_;
            w.domain.push_back(integer());
        }
        expect(')');
        if (peek() == '[') {
            ++pos_;
            w.shift = integer();
            expect(']');
        }
        skip();
        if (pos_ != s_.size()) throw ParseError(pos_, "trailing input");
        if (w.domain.size() < 2) throw ParseError(pos_, "weight needs at least two entries");
        for (const auto& t : w.tokens)
            if (t.color < 1 || t.color >= static_cast<int>(w.domain.size()))
                throw ParseError(pos_, "color " + std::to_string(t.color) + " out of range");
        return w;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }
    int integer() {
        skip();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseError(start, "expected integer");
        try {
            return std::stoi(s_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            throw ParseError(start, "integer out of range");
        }
    }
    GenToken token() {
        skip();
        const std::size_t start = pos_;
        if (s_.compare(pos_, 4, "Psi[") == 0) {
            pos_ += 4;
            const char sign = peek();
            if (sign != '+' && sign != '-') throw ParseError(pos_, "expected '+' or '-'");
            ++pos_;
            expect(',');
            const int i = integer();
            expect(',');
            const int e = integer();
            expect(']');
            return sign == '+' ? PsiPlus(i, e) : PsiMinus(i, e);
        }
        if (pos_ < s_.size() && (s_[pos_] == 'E' || s_[pos_] == 'F')) {
            const char kind = s_[pos_++];
            expect('[');
            const int i = integer();
            expect(',');
            const int r = integer();
            expect(']');
            return kind == 'E' ? E(i, r) : F(i, r);
        }
        throw ParseError(start, "expected E[..], F[..], Psi[..] or '@'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text) { return Parser(text).parse(); }

}  // namespace szero
