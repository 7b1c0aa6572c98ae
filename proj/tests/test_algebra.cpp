#include "szero/algebra.hpp"
#include "szero/sod.hpp"

#include <doctest.h>

#include <set>

using namespace szero;

namespace {

Word fword(const YoungDiagram& l, int k, int N) { return build_word(grassmannian_spec(k, N, Side::F), {l}); }

// Closed form of the right adjoint of F_lambda 1_(0,N), written out token by token.
Word closed_form_adjoint(const YoungDiagram& l, int k, int N) {
    const auto p = l.padded(static_cast<std::size_t>(k));
    auto lam = [&](int i) { return p[static_cast<std::size_t>(i - 1)]; };
    Word w;
    if (k == 0) return canonical(Word{{}, {0, N}, 0});
    w.domain = {k, N - k};
    w.tokens.push_back(PsiMinus(1, -lam(k) + 1));
    for (int j = 2; j <= k + 1; ++j) {
        w.tokens.push_back(E(1, -j));
        const int i = k - j + 2;  // E_{-j} is followed by the exponent lambda_i - lambda_{i-1} - 1
        w.tokens.push_back(PsiMinus(1, j == k + 1 ? lam(1) - 2 : lam(i) - lam(i - 1) - 1));
    }
    w.shift = l.size() - k;
    return canonical(w);
}

const std::set<std::string> kClauses{"5a", "5b", "6a", "6b", "6c", "U03", "weight-zero", "4a", "4b"};

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("weight flow") {
    const auto f = weight_flow(fword({2, 1}, 2, 4));
    REQUIRE(f);
    CHECK(f->front() == WeightVector{2, 2});
    CHECK(f->back() == WeightVector{0, 4});
    CHECK_FALSE(weight_flow(Word{{E(1, 0)}, {0, 3}, 0}).has_value());
    const auto e = weight_flow(Word{{}, {1, 2}, 0});
    REQUIRE(e);
    CHECK(*e == std::vector<WeightVector>{{1, 2}});
    CHECK(shift_by_root({1, 2}, 1, +1) == WeightVector{0, 3});
}

TEST_CASE("right adjoint examples") {
    const Word r = right_adjoint(fword({1}, 1, 3));
    CHECK(r == Word{{E(1, -2), PsiMinus(1, -1)}, {1, 2}, 0});
    const Word id{{}, {1, 2}, 0};
    CHECK(right_adjoint(id) == id);
    const Word r21 = right_adjoint(fword({2, 1}, 2, 4));
    CHECK(r21 == Word{{E(1, -2), PsiMinus(1, -2), E(1, -3)}, {2, 2}, 1});
    CHECK_THROWS_WITH(right_adjoint(Word{{E(1, 0)}, {0, 3}, 0}), "zero weight in flow");
}

TEST_CASE("right adjoint matches the closed form for F words, N <= 6") {
    for (int N = 2; N <= 6; ++N)
        for (int k = 0; k <= N; ++k)
            for (const auto& l : enumerate_P({N - k, k})) CHECK(right_adjoint(fword(l, k, N)) == closed_form_adjoint(l, k, N));
}

TEST_CASE("adjoint log names the clause per letter") {
    const auto log = adjoint_log(fword({2, 1}, 2, 4));
    REQUIRE(log.size() == 2);
    CHECK(log[0].clause == "4b");
    CHECK(log[0].step == 1);
    CHECK(log[1].step == 2);
}

TEST_CASE("push_psi_right") {
    // Psi^- F_s -> F_{s-1} Psi^- [-1]
    const Word w{{PsiMinus(1, 1), F(1, 2)}, {0, 3}, 0};
    CHECK(push_psi_right(w) == Word{{F(1, 1), PsiMinus(1, 1)}, {0, 3}, -1});
    const Word only{{PsiMinus(1, 3)}, {1, 2}, 0};
    CHECK(push_psi_right(only) == only);
    for (int l1 = 2; l1 <= 5; ++l1) {
        const Word x{{PsiMinus(1, l1 - 2), F(1, l1)}, {0, 5}, 0};
        const Word expect = canonical(Word{{F(1, 2), PsiMinus(1, l1 - 2)}, {0, 5}, -l1 + 2});
        CHECK(push_psi_right(x) == expect);
    }
    // Psi^+ E_r -> E_{r+1} Psi^+ [-1]
    CHECK(push_psi_right(Word{{PsiPlus(1, 1), E(1, -1)}, {1, 2}, 0}) == Word{{E(1, 0), PsiPlus(1, 1)}, {1, 2}, -1});
}

TEST_CASE("ef_step") {
    const Word w{{E(1, -2), F(1, 2)}, {0, 3}, 0};
    const FunctorExpr e = ef_step(w);
    REQUIRE(std::holds_alternative<std::shared_ptr<const Filtered>>(e));
    const auto& t = *std::get<std::shared_ptr<const Filtered>>(e);
    CHECK(t.target == 'A');
    CHECK(t.a == w);
    CHECK(t.b == Word{{F(1, 2), E(1, -2)}, {0, 3}, 0});
    CHECK(t.c == Word{{PsiMinus(1, 1)}, {0, 3}, 0});
    CHECK_FALSE(weight_flow(t.b).has_value());

    // interior: swap
    const Word s{{E(1, 0), F(1, 1)}, {1, 3}, 0};  // r+s = 1, source (1,3): -k1+1 = 0 <= 1 <= 2
    const FunctorExpr se = ef_step(s);
    REQUIRE(std::holds_alternative<Word>(se));
    CHECK(std::get<Word>(se) == Word{{F(1, 1), E(1, 0)}, {1, 3}, 0});
}

TEST_CASE("simplify examples") {
    const auto res = simplify(Word{{E(1, -2), F(1, 2)}, {0, 3}, 0});
    CHECK(res.verdict.kind == Verdict::Kind::Stuck);
    CHECK(res.verdict.residue == Word{{PsiMinus(1, 1)}, {0, 3}, -1});
    CHECK(simplify(Word{{}, {1, 2}, 3}).verdict == Verdict::iso(3));
    CHECK(simplify(Word{{E(1, 0)}, {0, 3}, 0}).verdict == Verdict::zero());
    CHECK(simplify(Word{{PsiPlus(1, 2), PsiPlus(1, -2)}, {1, 2}, 0}).verdict == Verdict::iso(0));
}

TEST_CASE("Grassmannian sweep with shift conservation, N <= 5") {
    for (int N = 2; N <= 5; ++N)
        for (int k = 0; k <= N; ++k) {
            const auto P = enumerate_P({N - k, k});
            for (std::size_t a = 0; a < P.size(); ++a)
                for (std::size_t b = a; b < P.size(); ++b) {
                    const auto res = simplify(compose(right_adjoint(fword(P[a], k, N)), fword(P[b], k, N)));
                    CHECK(res.verdict == (a == b ? Verdict::iso(0) : Verdict::zero()));
                    for (const auto& step : res.log) CHECK(kClauses.count(step.clause) == 1);
                }
        }
}

TEST_CASE("rewrite log is numbered and its digest is stable") {
    const Word w = compose(right_adjoint(fword({2, 1}, 2, 4)), fword({2, 1}, 2, 4));
    const auto a = simplify(w);
    const auto b = simplify(w);
    REQUIRE(!a.log.empty());
    for (std::size_t i = 0; i < a.log.size(); ++i) CHECK(a.log[i].step == static_cast<int>(i + 1));
    CHECK(a.digest() == b.digest());
    CHECK(hex64(a.digest()).size() == 16);
    SimplifyOptions quiet;
    quiet.record = false;
    CHECK(simplify(w, quiet).log.empty());
}

TEST_CASE("step budget exhaustion is reported as Stuck") {
    SimplifyOptions tight;
    tight.max_steps = 1;
    const Word w = compose(right_adjoint(fword({2, 1}, 2, 4)), fword({2, 1}, 2, 4));
    CHECK(simplify(w, tight).verdict.kind == Verdict::Kind::Stuck);
}

TEST_CASE("confluence under shuffled rule order, N <= 4") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        std::mt19937_64 rng(seed);
        SimplifyOptions opts;
        opts.rng = &rng;
        opts.record = false;
        for (int N = 2; N <= 4; ++N)
            for (int k = 0; k <= N; ++k) {
                const auto P = enumerate_P({N - k, k});
                for (std::size_t a = 0; a < P.size(); ++a)
                    for (std::size_t b = a; b < P.size(); ++b) {
                        const auto v = simplify(compose(right_adjoint(fword(P[a], k, N)), fword(P[b], k, N)), opts).verdict;
                        CHECK(v == (a == b ? Verdict::iso(0) : Verdict::zero()));
                    }
            }
    }
}

TEST_CASE("adjunction involution") {
    for (int N = 2; N <= 4; ++N)
        for (int k = 0; k <= N; ++k)
            for (const auto& l : enumerate_P({N - k, k})) {
                const Word w = fword(l, k, N);
                const Word r = right_adjoint(w);
                const Word rr = right_adjoint(r);
                CHECK(weight_flow(rr)->front() == weight_flow(w)->front());
                CHECK(simplify(compose(r, rr)).verdict == simplify(compose(r, w)).verdict);
            }
}

TEST_CASE("vanishing lemma") {
    CHECK(vanishing_lemma_check({1}, 2, 2, 3).verdict == Verdict::zero());
    CHECK(vanishing_lemma_check({2, 1}, 2, 3, 5).verdict == Verdict::zero());
    CHECK_THROWS(vanishing_lemma_check({1}, 1, 2, 3));
    CHECK_THROWS(vanishing_lemma_check({1}, 3, 2, 3));
    for (int N = 2; N <= 6; ++N)
        for (int k = 2; k <= N; ++k)
            for (const auto& l : enumerate_P({N - k, k}))
                for (int i = 2; i <= k; ++i) CHECK(vanishing_lemma_check(l, i, k, N).verdict == Verdict::zero());
}

TEST_CASE("parse_word") {
    const Word w = parse_word("E[1,-2] F[1,2] @ (0,3)");
    CHECK(w == Word{{E(1, -2), F(1, 2)}, {0, 3}, 0});
    CHECK(parse_word("@ (1,2)") == Word{{}, {1, 2}, 0});
    CHECK(parse_word("Psi[-,1,-1] F[2,0] @ (0,0,3) [2]") == Word{{PsiMinus(1, -1), F(2, 0)}, {0, 0, 3}, 2});
    for (const char* text : {"E[1,-2] Psi[+,1,3] F[1,2] @ (0,3) [-1]", "@ (4,0)", "F[1,0] F[2,1] @ (0,1,2)"}) {
        const Word x = parse_word(text);
        CHECK(parse_word(x.str()) == x);
    }
}

TEST_CASE("parse errors carry positions") {
    auto pos = [](const std::string& s) -> std::size_t {
        try {
            parse_word(s);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    CHECK(pos("F[1,2] X @ (0,4)") == 7);
    CHECK(pos("E[-1] @ (0,3)") == 4);
    CHECK(pos("F[1,2]") == 6);
    CHECK(pos("@ (1,2) junk") == 8);
    CHECK(pos("Psi[*,1,1] @ (1,1)") == 4);
    CHECK(pos("@ (3)") != std::string::npos);
    CHECK(pos("F[2,1] @ (0,3)") != std::string::npos);
    CHECK_THROWS_WITH_AS(parse_word("F[1,2] X @ (0,4)"), doctest::Contains("column 8"), ParseError);
}

}
