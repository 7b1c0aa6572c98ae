#pragma once

// Words in the generators E_{i,r}, F_{i,s}, (Psi^+_i)^e, (Psi^-_i)^e of the
// shifted q=0 affine algebra, and a rewriting engine that decides
// Hom-vanishing statements for them.
//
// A word is read like a composition of functors: the rightmost token acts
// first, starting from the domain weight.

#include "szero/partitions.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace szero {

using WeightVector = std::vector<int>;

bool is_valid_weight(const WeightVector& k, int N);
int weight_total(const WeightVector& k);
/// k + sign * alpha_i, colors are 1-based.
WeightVector shift_by_root(const WeightVector& k, int color, int sign);
std::string str(const WeightVector& k);

enum class TokenKind { E, F, PsiPlus, PsiMinus };

struct GenToken {
    TokenKind kind = TokenKind::E;
    int color = 1;
    int index = 0;  // r for E, s for F, exponent for Psi

    bool is_letter() const { return kind == TokenKind::E || kind == TokenKind::F; }
    bool is_psi() const { return !is_letter(); }
    std::string str() const;
    friend bool operator==(const GenToken&, const GenToken&) = default;
};

GenToken E(int color, int r);
GenToken F(int color, int s);
GenToken PsiPlus(int color, int e);
GenToken PsiMinus(int color, int e);

struct Word {
    std::vector<GenToken> tokens;
    WeightVector domain;
    int shift = 0;

    int N() const { return weight_total(domain); }
    std::string str() const;
    friend bool operator==(const Word&, const Word&) = default;
};

struct ZeroExpr {
    friend bool operator==(const ZeroExpr&, const ZeroExpr&) = default;
};
struct Filtered;
/// Zero, a word (the empty word is a shifted identity), or an exact triangle.
using FunctorExpr = std::variant<ZeroExpr, Word, std::shared_ptr<const Filtered>>;

/// Exact triangle a -> b -> c; `target` names the member the triangle was built for.
struct Filtered {
    Word a, b, c;
    char target = 'A';
};

std::string str(const FunctorExpr& e);

/// Word composition: outer after inner.
Word compose(const Word& outer, const Word& inner);

/// Weights at every token boundary: result[j] is the weight just left of
/// token j (its target), result[size] is the domain and result[0] the codomain.
/// nullopt when some intermediate weight leaves C(n,N).
std::optional<std::vector<WeightVector>> weight_flow(const Word& w);

/// Merges adjacent Psi tokens of equal color and sign, dropping zero exponents.
Word canonical(Word w);

Word right_adjoint(const Word& w);

/// Moves every Psi token to the right end where the rules allow it.
/// Psi of one color never crosses a letter of another color.
Word push_psi_right(const Word& w);

/// One E/F interaction at the rightmost adjacent same-color pair, if a rule applies.
FunctorExpr ef_step(const Word& w);

struct Verdict {
    enum class Kind { IsoIdentity, ProvenZero, Stuck };
    Kind kind = Kind::Stuck;
    int shift = 0;
    Word residue;

    static Verdict iso(int s) { return {Kind::IsoIdentity, s, {}}; }
    static Verdict zero() { return {Kind::ProvenZero, 0, {}}; }
    static Verdict stuck(Word w) { return {Kind::Stuck, 0, std::move(w)}; }
    std::string str() const;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct RewriteStep {
    int step = 0;
    std::string clause;  // 5a 5b 6a 6b 6c U03 weight-zero 4a 4b
    std::string before;
    std::string after;
};

struct SimplifyOptions {
    /// Per-word step budget; 0 means 4 * length^2.
    int max_steps = 0;
    /// When set, eligible rewrite sites are tried in random order.
    std::mt19937_64* rng = nullptr;
    bool record = true;
};

struct SimplifyResult {
    Verdict verdict;
    std::vector<RewriteStep> log;
    std::uint64_t digest() const;
};

SimplifyResult simplify(const Word& w, const SimplifyOptions& opts = {});
SimplifyResult simplify(const FunctorExpr& e, const SimplifyOptions& opts = {});

/// FNV-1a over the serialized steps.
std::uint64_t log_digest(const std::vector<RewriteStep>& log);
std::string hex64(std::uint64_t x);

/// Adjoint log entries for building right_adjoint(w), one per E/F token.
std::vector<RewriteStep> adjoint_log(const Word& w);

/// Builds the word of the vanishing lemma and simplifies it.
/// Requires lambda in P(N-k,k) and 2 <= i <= k.
SimplifyResult vanishing_lemma_check(const YoungDiagram& lambda, int i, int k, int N);
Word vanishing_lemma_word(const YoungDiagram& lambda, int i, int k, int N);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error("parse error at column " + std::to_string(pos + 1) + ": " + msg), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Grammar: token* '@' '(' int (',' int)* ')' ('[' int ']')?
/// token := 'E[' i ',' r ']' | 'F[' i ',' s ']' | 'Psi[' ('+'|'-') ',' i ',' e ']'
Word parse_word(const std::string& text);

}  // namespace szero
