#include "szero/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace szero {

namespace {

bool weakly_decreasing(const std::vector<int>& v) {
    return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
    if (!weakly_decreasing(parts_)) throw std::invalid_argument("diagram parts must be weakly decreasing");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (!parts_.empty() && parts_.back() < 0) throw std::invalid_argument("diagram parts must be nonnegative");
}

int YoungDiagram::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> YoungDiagram::padded(std::size_t len) const {
    if (len < parts_.size()) throw std::invalid_argument("diagram " + str() + " longer than " + std::to_string(len));
    std::vector<int> out = parts_;
    out.resize(len, 0);
    return out;
}

YoungDiagram YoungDiagram::transpose() const {
    std::vector<int> t(parts_.empty() ? 0 : parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[j];
    return YoungDiagram(std::move(t));
}

std::string YoungDiagram::str() const { return join(parts_); }

RationalWeight::RationalWeight(std::vector<int> entries) : entries_(std::move(entries)) {
    if (!weakly_decreasing(entries_)) throw std::invalid_argument("weight " + join(entries_) + " is not dominant");
}

RationalWeight RationalWeight::from_diagram(const YoungDiagram& d, std::size_t rank) {
    return RationalWeight(d.padded(rank));
}

int RationalWeight::size() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool RationalWeight::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
}

RationalWeight RationalWeight::twisted(int c) const {
    std::vector<int> out = entries_;
    for (int& x : out) x += c;
    return RationalWeight(std::move(out));
}

std::string RationalWeight::str() const { return join(entries_); }

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<YoungDiagram> enumerate_P(DiagramBox box) {
    if (box.a < 0 || box.b < 0) throw std::invalid_argument("P(a,b) needs a,b >= 0");
    std::vector<YoungDiagram> out;
    std::vector<int> cur(static_cast<std::size_t>(box.b), 0);
    // Odometer over weakly decreasing sequences, generated in lex order.
    auto rec = [&](auto&& self, std::size_t pos, int cap) -> void {
        if (pos == cur.size()) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            cur[pos] = v;
            self(self, pos + 1, v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, box.a);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return lex_compare(x, y) < 0; });
    return out;
}

std::strong_ordering lex_compare(const YoungDiagram& x, const YoungDiagram& y) {
    const std::size_t len = std::max(x.length(), y.length());
    for (std::size_t i = 0; i < len; ++i)
        if (x[i] != y[i]) return x[i] <=> y[i];
    return std::strong_ordering::equal;
}

std::strong_ordering prodlex_compare(std::span<const YoungDiagram> t, std::span<const YoungDiagram> u) {
    if (t.size() != u.size()) throw ArityError("tuple arity");
    for (std::size_t i = 0; i < t.size(); ++i)
        if (auto c = lex_compare(t[i], u[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

namespace {

// Adds the rows of mu one label at a time as horizontal strips, keeping the
// reading word (rows top to bottom, right to left) a lattice word.
void lr_fill(std::vector<int>& shape, const std::vector<int>& mu, std::size_t label,
             std::vector<std::vector<int>>& added, std::size_t max_rows,
             std::map<YoungDiagram, std::int64_t>& out) {
    if (label == mu.size()) {
        ++out[YoungDiagram(shape)];
        return;
    }
    const std::vector<int> before = shape;
    std::vector<int>& strip = added[label];
    strip.assign(max_rows, 0);
    const int total = mu[label];

    auto rec = [&](auto&& self, std::size_t row, int remaining) -> void {
        if (row == max_rows) {
            if (remaining == 0) lr_fill(shape, mu, label + 1, added, max_rows, out);
            return;
        }
        // Labels below row `label` cannot appear in a semistandard LR filling.
        int hi = row < label ? 0 : remaining;
        if (row > 0) hi = std::min(hi, before[row - 1] - before[row]);
        for (int h = hi; h >= 0; --h) {
            if (label > 0) {
                int cum_this = h, cum_prev = 0;
                for (std::size_t r = 0; r < row; ++r) cum_this += strip[r];
                for (std::size_t r = 0; r < row; ++r) cum_prev += added[label - 1][r];
                if (cum_this > cum_prev) continue;
            }
            strip[row] = h;
            shape[row] = before[row] + h;
            self(self, row + 1, remaining - h);
        }
        strip[row] = 0;
        shape[row] = before[row];
    };
    rec(rec, 0, total);
    shape = before;
}

struct LrKey {
    std::vector<int> lambda, mu;
    std::size_t rows;
    auto operator<=>(const LrKey&) const = default;
};

std::mutex lr_mutex;
std::map<LrKey, std::map<YoungDiagram, std::int64_t>> lr_cache;

}  // namespace

std::map<YoungDiagram, std::int64_t> lr_product(const YoungDiagram& lambda, const YoungDiagram& mu,
                                                std::size_t max_rows) {
    if (lambda.length() > max_rows || mu.length() > max_rows) return {};
    LrKey key{lambda.parts(), mu.parts(), max_rows};
    {
        std::lock_guard lock(lr_mutex);
        if (auto it = lr_cache.find(key); it != lr_cache.end()) return it->second;
    }
    std::map<YoungDiagram, std::int64_t> out;
    std::vector<int> shape = lambda.padded(max_rows);
    std::vector<std::vector<int>> added(mu.length());
    lr_fill(shape, mu.parts(), 0, added, max_rows, out);
    std::lock_guard lock(lr_mutex);
    lr_cache.emplace(std::move(key), out);
    return out;
}

std::int64_t lr_coefficient(const YoungDiagram& lambda, const YoungDiagram& mu, const YoungDiagram& nu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    const auto prod = lr_product(lambda, mu, std::max({lambda.length(), mu.length(), nu.length()}));
    auto it = prod.find(nu);
    return it == prod.end() ? 0 : it->second;
}

WeightMultiset gl_tensor(const RationalWeight& a, const RationalWeight& b) {
    if (a.rank() != b.rank()) throw ArityError("gl_tensor: rank mismatch");
    const std::size_t k = a.rank();
    if (k == 0) return {{RationalWeight{}, 1}};
    const int shift_a = -std::min(0, a.entries().back());
    const int shift_b = -std::min(0, b.entries().back());
    const auto prod = lr_product(YoungDiagram(a.twisted(shift_a).entries()),
                                 YoungDiagram(b.twisted(shift_b).entries()), k);
    WeightMultiset out;
    for (const auto& [nu, c] : prod)
        out[RationalWeight::from_diagram(nu, k).twisted(-shift_a - shift_b)] += c;
    return out;
}

RationalWeight gl_dual(const RationalWeight& a) {
    std::vector<int> out(a.entries().rbegin(), a.entries().rend());
    for (int& x : out) x = -x;
    return RationalWeight(std::move(out));
}

std::vector<BranchTerm> gl_branch(const RationalWeight& lambda) {
    const std::size_t k = lambda.rank();
    if (k == 0) throw std::invalid_argument("gl_branch needs rank >= 1");
    std::vector<BranchTerm> out;
    std::vector<int> mu(k - 1);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == k - 1) {
            RationalWeight m(mu);
            out.push_back({m, lambda.size() - m.size()});
            return;
        }
        for (int v = lambda[i]; v >= lambda[i + 1]; --v) {
            mu[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::map<std::pair<RationalWeight, RationalWeight>, std::int64_t> gl_restrict(const RationalWeight& lambda,
                                                                              std::size_t p) {
    const std::size_t n = lambda.rank();
    if (p > n) throw std::invalid_argument("gl_restrict: block larger than rank");
    const std::size_t q = n - p;
    const int shift = n ? -std::min(0, lambda.entries().back()) : 0;
    const YoungDiagram lam(lambda.twisted(shift).entries());
    std::map<std::pair<RationalWeight, RationalWeight>, std::int64_t> out;
    // c^lam_{mu,nu} with mu of length <= p, nu of length <= q, nu inside lam.
    const auto mus = enumerate_P({lam[0], static_cast<int>(p)});
    for (const auto& mu : mus) {
        if (mu.size() > lam.size()) continue;
        bool inside = true;
        for (std::size_t i = 0; i < mu.length(); ++i) inside = inside && mu[i] <= lam[i];
        if (!inside) continue;
        const auto nus = enumerate_P({lam[0], static_cast<int>(q)});
        for (const auto& nu : nus) {
            if (mu.size() + nu.size() != lam.size()) continue;
            const auto prod = lr_product(mu, nu, n);
            auto it = prod.find(lam);
            if (it == prod.end()) continue;
            out[{RationalWeight::from_diagram(mu, p).twisted(-shift),
                 RationalWeight::from_diagram(nu, q).twisted(-shift)}] += it->second;
        }
    }
    return out;
}

std::int64_t weyl_dimension(const RationalWeight& w) {
    const std::size_t n = w.rank();
    std::vector<std::int64_t> num, den;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            num.push_back(w[i] - w[j] + static_cast<std::int64_t>(j - i));
            den.push_back(static_cast<std::int64_t>(j - i));
        }
    // Cancel every denominator factor against the numerators before multiplying.
    for (std::int64_t& d : den)
        for (std::int64_t& x : num) {
            if (d == 1) break;
            const std::int64_t g = std::gcd(d, x);
            d /= g;
            x /= g;
        }
    std::int64_t r = 1;
    for (std::int64_t x : num) r *= x;
    for (std::int64_t d : den) r /= d;
    return r;
}

}  // namespace szero
