#include "szero/ktheory.hpp"

#include <functional>
#include <mutex>
#include <sstream>
#include <tuple>

namespace szero {

namespace {

std::string bundle_str(const MixedBundle& b) {
    const bool q = !b.q.is_zero(), v = !b.v.is_zero();
    if (!q && !v) return "O";
    std::string out;
    if (q) out += "S_" + b.q.str() + "Q";
    if (q && v) out += " (x) ";
    if (v) out += "S_" + b.v.str() + "V";
    return out;
}

// One relative Bott step on the V side: prepend s to the V-weight.
std::optional<Cohomology> prepend(int s, const RationalWeight& v) {
    std::vector<int> w{s};
    w.insert(w.end(), v.entries().begin(), v.entries().end());
    return bott_normalize(w);
}

// One relative Bott step on the Q side: append r to the Q-weight.
std::optional<Cohomology> append(const RationalWeight& q, int r) {
    std::vector<int> w = q.entries();
    w.push_back(r);
    return bott_normalize(w);
}

}  // namespace

std::string FormalComplex::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, m] : terms) {
        os << (first ? "" : " + ");
        if (m != 1) os << m << "*";
        os << bundle_str(key.first) << " in degree " << key.second;
        first = false;
    }
    os << " on Gr(" << k << "," << N << ")";
    return os.str();
}

FormalComplex eval_F_word(const YoungDiagram& lambda, int k, int N) {
    if (static_cast<int>(lambda.length()) > k) throw std::invalid_argument("lambda has more than k parts");
    if (k < 0 || k > N) throw std::invalid_argument("need 0 <= k <= N");
    const auto parts = lambda.padded(static_cast<std::size_t>(k));
    RationalWeight v;
    int degree = 0;
    FormalComplex out{k, N, {}};
    for (int j = k; j-- > 0;) {
        auto h = prepend(parts[static_cast<std::size_t>(j)], v);
        if (!h) return out;
        v = h->weight;
        degree += h->degree;
    }
    out.terms[{MixedBundle{RationalWeight::zero(static_cast<std::size_t>(N - k)), v}, degree}] = 1;
    return out;
}

FormalComplex eval_E_word(const YoungDiagram& mu, int k, int N) {
    if (static_cast<int>(mu.length()) > N - k) throw std::invalid_argument("mu has more than N-k parts");
    if (k < 0 || k > N) throw std::invalid_argument("need 0 <= k <= N");
    const auto parts = mu.padded(static_cast<std::size_t>(N - k));
    RationalWeight q;
    int degree = 0;
    FormalComplex out{k, N, {}};
    for (int j = N - k; j-- > 0;) {
        auto h = append(q, -parts[static_cast<std::size_t>(j)]);
        if (!h) return out;
        q = h->weight;
        degree += h->degree;
    }
    out.terms[{MixedBundle{q, RationalWeight::zero(static_cast<std::size_t>(k))}, degree}] = 1;
    return out;
}

std::optional<FormalComplex> eval_word(const Word& w) {
    if (w.domain.size() != 2) return std::nullopt;
    const int N = w.N();
    bool all_f = true, all_e = true;
    for (const auto& t : w.tokens) {
        all_f = all_f && t.kind == TokenKind::F;
        all_e = all_e && t.kind == TokenKind::E;
    }
    const int m = static_cast<int>(w.tokens.size());
    FormalComplex out;
    if (all_f && w.domain == WeightVector{0, N} && m <= N) {
        RationalWeight v;
        int degree = 0;
        out = {m, N, {}};
        for (int j = m; j-- > 0;) {
            auto h = prepend(w.tokens[static_cast<std::size_t>(j)].index, v);
            if (!h) return out;
            v = h->weight;
            degree += h->degree;
        }
        out.terms[{MixedBundle{RationalWeight::zero(static_cast<std::size_t>(N - m)), v}, degree - w.shift}] = 1;
        return out;
    }
    if (all_e && w.domain == WeightVector{N, 0} && m <= N) {
        RationalWeight q;
        int degree = 0;
        out = {N - m, N, {}};
        for (int j = m; j-- > 0;) {
            auto h = append(q, w.tokens[static_cast<std::size_t>(j)].index);
            if (!h) return out;
            q = h->weight;
            degree += h->degree;
        }
        out.terms[{MixedBundle{q, RationalWeight::zero(static_cast<std::size_t>(N - m))}, degree - w.shift}] = 1;
        return out;
    }
    return std::nullopt;
}

namespace {

struct Gram {
    std::vector<YoungDiagram> basis;
    IntMatrix g;  // g[mu][lambda] = chi(S_mu V, S_lambda V)
};

std::mutex gram_mutex;
std::map<std::pair<int, int>, Gram> gram_cache;

MixedBundle basis_bundle(const YoungDiagram& d, int k, int N) {
    return {RationalWeight::zero(static_cast<std::size_t>(N - k)), RationalWeight::from_diagram(d, k)};
}

const Gram& gram(int k, int N) {
    {
        std::lock_guard lock(gram_mutex);
        if (auto it = gram_cache.find({k, N}); it != gram_cache.end()) return it->second;
    }
    Gram out;
    out.basis = enumerate_P({N - k, k});
    const std::size_t m = out.basis.size();
    out.g.assign(m, std::vector<std::int64_t>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            out.g[a][b] = euler_characteristic(
                ext_bundles(basis_bundle(out.basis[a], k, N), basis_bundle(out.basis[b], k, N), k, N));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b)
            if (out.g[a][b] != (a == b ? 1 : 0)) throw std::logic_error("Gram matrix is not unitriangular");
    std::lock_guard lock(gram_mutex);
    return gram_cache.emplace(std::make_pair(k, N), std::move(out)).first->second;
}

}  // namespace

std::vector<std::int64_t> schur_coordinates(const KClass& x, int k, int N) {
    const Gram& G = gram(k, N);
    const std::size_t m = G.basis.size();
    std::vector<std::int64_t> b(m, 0);
    for (std::size_t a = 0; a < m; ++a)
        for (const auto& [bundle, c] : x)
            if (c != 0) b[a] += c * euler_characteristic(ext_bundles(basis_bundle(G.basis[a], k, N), bundle, k, N));
    // Forward substitution: row a only involves columns <= a.
    std::vector<std::int64_t> out(m, 0);
    for (std::size_t a = 0; a < m; ++a) {
        std::int64_t s = b[a];
        for (std::size_t j = 0; j < a; ++j) s -= G.g[a][j] * out[j];
        out[a] = s;
    }
    return out;
}

namespace {

std::int64_t sign(int d) { return d % 2 == 0 ? 1 : -1; }

// Image of [S_lambda V] on Gr(k,N) under g, as a class on the target Grassmannian.
KClass apply_generator(const GenToken& g, const YoungDiagram& lambda, int k, int N) {
    const RationalWeight v = RationalWeight::from_diagram(lambda, k);
    const auto nq = static_cast<std::size_t>(N - k);
    KClass out;
    switch (g.kind) {
        case TokenKind::F: {
            // Gr(k) -> Gr(k+1): V' = old V, line V/V'.
            if (auto h = prepend(g.index, v))
                out[{RationalWeight::zero(nq - 1), h->weight}] += sign(h->degree);
            break;
        }
        case TokenKind::E: {
            // Gr(k) -> Gr(k-1): branch V into V' and the line V/V', then push along P(C^N/V').
            for (const auto& [mu, e] : gl_branch(v))
                if (auto h = append(RationalWeight::zero(nq), e + g.index)) out[{h->weight, mu}] += sign(h->degree);
            break;
        }
        case TokenKind::PsiPlus: {
            const int e = g.index;
            out[{RationalWeight::zero(nq).twisted(e), v}] += sign(e * (1 - (N - k)));
            break;
        }
        case TokenKind::PsiMinus: {
            const int e = g.index;
            out[{RationalWeight::zero(nq), v.twisted(-e)}] += sign(e * (1 - k));
            break;
        }
    }
    return out;
}

}  // namespace

GeneratorMatrix euler_matrix(const GenToken& g, const WeightVector& source) {
    if (source.size() != 2) throw std::invalid_argument("euler_matrix supports n = 2 only");
    if (g.color != 1) throw std::invalid_argument("color out of range");
    const int N = weight_total(source);
    if (!is_valid_weight(source, N)) throw std::invalid_argument("source weight " + str(source) + " invalid");
    GeneratorMatrix out;
    out.token = g;
    out.source = source;
    const int k = source[0];
    out.source_basis = enumerate_P({N - k, k});
    WeightVector target = source;
    if (g.kind == TokenKind::E) target = shift_by_root(source, 1, +1);
    if (g.kind == TokenKind::F) target = shift_by_root(source, 1, -1);
    if (!is_valid_weight(target, N)) return out;
    out.target = target;
    const int kt = target[0];
    out.target_basis = enumerate_P({N - kt, kt});
    out.matrix.assign(out.target_basis.size(), std::vector<std::int64_t>(out.source_basis.size(), 0));
    for (std::size_t c = 0; c < out.source_basis.size(); ++c) {
        const auto col = schur_coordinates(apply_generator(g, out.source_basis[c], k, N), kt, N);
        for (std::size_t r = 0; r < col.size(); ++r) out.matrix[r][c] = col[r];
    }
    return out;
}

std::string GeneratorMatrix::dump() const {
    std::ostringstream os;
    os << token.str() << " " << str(source) << " -> " << (target.empty() ? std::string("0") : str(target)) << "\n";
    os << "cols:";
    for (const auto& d : source_basis) os << " " << d.str();
    os << "\nrows:";
    for (const auto& d : target_basis) os << " " << d.str();
    os << "\n";
    for (const auto& row : matrix) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
        os << "\n";
    }
    return os.str();
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner) {
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    IntMatrix out(a.size(), std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < inner; ++j)
            if (a[i][j] != 0)
                for (std::size_t c = 0; c < cols; ++c) out[i][c] += a[i][j] * b[j][c];
    return out;
}

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix out(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

namespace {

// Dense matrix with explicit shape, so zero-row maps still carry their width.
struct Mat {
    std::size_t rows = 0, cols = 0;
    IntMatrix a;

    static Mat zero(std::size_t r, std::size_t c) { return {r, c, IntMatrix(r, std::vector<std::int64_t>(c, 0))}; }
    friend bool operator==(const Mat&, const Mat&) = default;
};

Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::logic_error("shape mismatch");
    return {x.rows, y.cols, y.rows == 0 ? IntMatrix(x.rows, std::vector<std::int64_t>(y.cols, 0)) : multiply(x.a, y.a, x.cols)};
}
Mat operator-(const Mat& x) {
    Mat out = x;
    for (auto& row : out.a)
        for (auto& v : row) v = -v;
    return out;
}
Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::logic_error("shape mismatch");
    Mat out = x;
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) out.a[i][j] += y.a[i][j];
    return out;
}

Mat operator-(const Mat& x, const Mat& y) { return {x.rows, x.cols, (x + -y).a}; }

class Oracle {
public:
    explicit Oracle(int N) : N_(N) {}

    std::size_t rank(const WeightVector& k) const {
        return is_valid_weight(k, N_) ? static_cast<std::size_t>(binomial(N_, k[0])) : 0;
    }

    Mat gen(const GenToken& g, const WeightVector& k) {
        WeightVector t = k;
        if (g.kind == TokenKind::E) t = shift_by_root(k, 1, +1);
        if (g.kind == TokenKind::F) t = shift_by_root(k, 1, -1);
        if (!is_valid_weight(k, N_) || !is_valid_weight(t, N_)) return Mat::zero(rank(t), rank(k));
        auto key = std::make_tuple(static_cast<int>(g.kind), g.index, k[0]);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            const auto gm = euler_matrix(g, k);
            it = cache_.emplace(key, Mat{gm.target_basis.size(), gm.source_basis.size(), gm.matrix}).first;
        }
        return it->second;
    }
    Mat id(const WeightVector& k) const { return {rank(k), rank(k), identity_matrix(rank(k))}; }

    std::vector<WeightVector> weights() const {
        std::vector<WeightVector> out;
        for (int k1 = 0; k1 <= N_; ++k1) out.push_back({k1, N_ - k1});
        return out;
    }

private:
    int N_;
    std::map<std::tuple<int, int, int>, Mat> cache_;
};

bool e_in_range(int r, const WeightVector& k) { return -k[0] - 1 <= r && r <= 0; }
bool f_in_range(int s, const WeightVector& k) { return 0 <= s && s <= k[1] + 1; }

std::string witness(const WeightVector& k, const std::string& rest) { return "k=" + str(k) + " " + rest; }

void tally(RelationResult& res, bool ok, const std::function<std::string()>& describe) {
    ++res.checked;
    if (!ok && res.pass) {
        res.pass = false;
        res.witness = describe();
    }
}

}  // namespace

const std::vector<std::string>& relation_ids() {
    static const std::vector<std::string> ids{"U01", "U03", "U04", "U05", "U06", "U07", "U09-interior", "U09-boundary"};
    return ids;
}

bool relation_in_scope(const std::string& id) {
    for (const auto& r : relation_ids())
        if (r == id) return true;
    return false;
}

RelationResult check_relation(const std::string& id, int N) {
    if (!relation_in_scope(id)) throw std::invalid_argument("relation " + id + " is out of scope");
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    Oracle o(N);
    RelationResult res{id, true, 0, {}};
    const std::string is = std::to_string(0);
    auto S = [](int x) { return std::to_string(x); };

    if (id == "U01") {
        // Weight grading: e/f shift the weight by +-alpha, psi preserves it, and the
        // graded pieces have total rank 2^N.
        std::int64_t total = 0;
        for (const auto& k : o.weights()) {
            total += static_cast<std::int64_t>(o.rank(k));
            for (int r = -k[0] - 1; r <= 0; ++r) {
                const auto m = euler_matrix(E(1, r), k);
                const auto t = shift_by_root(k, 1, +1);
                tally(res, m.matrix.size() == o.rank(t) && m.source_basis.size() == o.rank(k),
                      [&] { return witness(k, "e_" + S(r)); });
            }
            for (int s = 0; s <= k[1] + 1; ++s) {
                const auto m = euler_matrix(F(1, s), k);
                const auto t = shift_by_root(k, 1, -1);
                tally(res, m.matrix.size() == o.rank(t) && m.source_basis.size() == o.rank(k),
                      [&] { return witness(k, "f_" + S(s)); });
            }
            for (const auto& psi : {PsiPlus(1, 1), PsiMinus(1, 1)}) {
                const auto m = euler_matrix(psi, k);
                tally(res, m.target == k, [&] { return witness(k, psi.str()); });
            }
        }
        tally(res, total == (std::int64_t{1} << N), [&] { return "total rank " + S(static_cast<int>(total)); });
        return res;
    }

    for (const auto& k : o.weights()) {
        const auto kp = shift_by_root(k, 1, +1);  // k + alpha
        const auto km = shift_by_root(k, 1, -1);  // k - alpha
        if (id == "U03") {
            for (auto kind : {TokenKind::PsiPlus, TokenKind::PsiMinus})
                for (int e : {1, -1}) {
                    GenToken a{kind, 1, e}, b{kind, 1, -e};
                    tally(res, o.gen(a, k) * o.gen(b, k) == o.id(k), [&] { return witness(k, a.str() + b.str()); });
                }
        } else if (id == "U04") {
            if (!is_valid_weight(kp, N)) continue;
            for (int s = -k[0] - 1; s <= 0; ++s)
                for (int r = -kp[0] - 1; r <= 0; ++r) {
                    if (!e_in_range(r - 1, k) || !e_in_range(s + 1, kp)) continue;
                    const Mat lhs = o.gen(E(1, r), kp) * o.gen(E(1, s), k);
                    const Mat rhs = -(o.gen(E(1, s + 1), kp) * o.gen(E(1, r - 1), k));
                    tally(res, lhs == rhs, [&] { return witness(k, "r=" + S(r) + " s=" + S(s)); });
                }
        } else if (id == "U05") {
            if (!is_valid_weight(km, N)) continue;
            for (int s = 0; s <= k[1] + 1; ++s)
                for (int r = 0; r <= km[1] + 1; ++r) {
                    if (!f_in_range(r + 1, k) || !f_in_range(s - 1, km)) continue;
                    const Mat lhs = o.gen(F(1, r), km) * o.gen(F(1, s), k);
                    const Mat rhs = -(o.gen(F(1, s - 1), km) * o.gen(F(1, r + 1), k));
                    tally(res, lhs == rhs, [&] { return witness(k, "r=" + S(r) + " s=" + S(s)); });
                }
        } else if (id == "U06") {
            for (auto kind : {TokenKind::PsiPlus, TokenKind::PsiMinus})
                for (int r = -k[0] - 1; r + 1 <= 0; ++r) {
                    const GenToken psi{kind, 1, 1};
                    const Mat lhs = o.gen(psi, kp) * o.gen(E(1, r), k);
                    const Mat rhs = -(o.gen(E(1, r + 1), k) * o.gen(psi, k));
                    tally(res, lhs == rhs, [&] { return witness(k, psi.str() + " r=" + S(r)); });
                }
        } else if (id == "U07") {
            for (auto kind : {TokenKind::PsiPlus, TokenKind::PsiMinus})
                for (int r = 1; r <= k[1] + 1; ++r) {
                    const GenToken psi{kind, 1, 1};
                    const Mat lhs = o.gen(psi, km) * o.gen(F(1, r), k);
                    const Mat rhs = -(o.gen(F(1, r - 1), k) * o.gen(psi, k));
                    tally(res, lhs == rhs, [&] { return witness(k, psi.str() + " r=" + S(r)); });
                }
        } else {
            const bool interior = id == "U09-interior";
            for (int r = -k[0] - 1; r <= 0; ++r)
                for (int s = 0; s <= k[1] + 1; ++s) {
                    const int rs = r + s;
                    if (rs == k[1] + 1 || rs == -k[0] - 1) continue;  // h-cases
                    const bool in_interior = -k[0] + 1 <= rs && rs <= k[1] - 1;
                    if (interior != in_interior) continue;
                    if (!interior && rs != k[1] && rs != -k[0]) continue;
                    const Mat ef = o.gen(E(1, r), km) * o.gen(F(1, s), k);
                    const Mat fe = o.gen(F(1, s), kp) * o.gen(E(1, r), k);
                    const Mat comm = ef - fe;
                    if (interior) {
                        tally(res, comm == Mat::zero(o.rank(k), o.rank(k)),
                              [&] { return witness(k, "r=" + S(r) + " s=" + S(s)); });
                        continue;
                    }
                    // When k_1 = k_2 = 0 both boundary formulas apply; only N >= 2 is in scope so this never happens.
                    const Mat expect = rs == k[1] ? o.gen(PsiPlus(1, 1), k) : -o.gen(PsiMinus(1, 1), k);
                    tally(res, comm == expect, [&] { return witness(k, "r=" + S(r) + " s=" + S(s)); });
                }
        }
    }
    (void)is;
    return res;
}

std::optional<GradedDims> verdict_dims(const Verdict& v) {
    switch (v.kind) {
        case Verdict::Kind::IsoIdentity: return GradedDims{{-v.shift, 1}};
        case Verdict::Kind::ProvenZero: return GradedDims{};
        default: return std::nullopt;
    }
}

std::string CrossCheck::str() const {
    switch (status) {
        case Status::Agree: return "agree";
        case Status::Mismatch: return "MISMATCH";
        case Status::EngineIncomplete: return "engine-incomplete";
    }
    return "?";
}

namespace {

CrossCheck compare(const Word& wt, const Word& wu, GradedDims ext) {
    CrossCheck out;
    out.verdict = simplify(compose(right_adjoint(wt), wu), {0, nullptr, false}).verdict;
    out.ext = std::move(ext);
    const auto expect = verdict_dims(out.verdict);
    if (!expect)
        out.status = CrossCheck::Status::EngineIncomplete;
    else
        out.status = *expect == out.ext ? CrossCheck::Status::Agree : CrossCheck::Status::Mismatch;
    return out;
}

Word f_word(const YoungDiagram& lambda, int k, int N) {
    Word w;
    w.domain = {0, N};
    for (int p : lambda.padded(static_cast<std::size_t>(k))) w.tokens.push_back(F(1, p));
    return w;
}

Word e_word(const YoungDiagram& mu, int k, int N) {
    Word w;
    w.domain = {N, 0};
    for (int p : mu.padded(static_cast<std::size_t>(N - k))) w.tokens.push_back(E(1, -p));
    return w;
}

}  // namespace

CrossCheck cross_check(const YoungDiagram& lambda, const YoungDiagram& lambda2, int k, int N) {
    return compare(f_word(lambda, k, N), f_word(lambda2, k, N), ext_V(lambda, lambda2, k, N));
}

CrossCheck cross_check_E(const YoungDiagram& mu, const YoungDiagram& mu2, int k, int N) {
    if (!mu.fits(k, N - k) || !mu2.fits(k, N - k)) throw std::invalid_argument("not in P(a,b)");
    const auto zero = RationalWeight::zero(static_cast<std::size_t>(k));
    const auto q1 = gl_dual(RationalWeight::from_diagram(mu, N - k));
    const auto q2 = gl_dual(RationalWeight::from_diagram(mu2, N - k));
    return compare(e_word(mu, k, N), e_word(mu2, k, N), ext_bundles({q1, zero}, {q2, zero}, k, N));
}

}  // namespace szero
