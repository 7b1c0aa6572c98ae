#include "szero/bott.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace szero {

std::optional<Cohomology> bott_normalize(std::span<const int> w) {
    const std::size_t m = w.size();
    std::vector<int> v(w.begin(), w.end());
    for (std::size_t i = 0; i < m; ++i) v[i] += static_cast<int>(m - 1 - i);
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (v[i] == v[j]) return std::nullopt;
            if (v[i] < v[j]) ++inversions;
        }
    std::sort(v.begin(), v.end(), std::greater<>());
    for (std::size_t i = 0; i < m; ++i) v[i] -= static_cast<int>(m - 1 - i);
    return Cohomology{RationalWeight(std::move(v)), inversions};
}

std::optional<Cohomology> grassmann_cohomology(const RationalWeight& alpha, const RationalWeight& beta, int N) {
    if (static_cast<int>(alpha.rank() + beta.rank()) != N) throw ArityError("rank mismatch");
    std::vector<int> w = alpha.entries();
    w.insert(w.end(), beta.entries().begin(), beta.entries().end());
    return bott_normalize(w);
}

namespace {

void check_box(const YoungDiagram& d, int a, int b) {
    if (!d.fits(a, b))
        throw std::invalid_argument(d.str() + " not in P(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

void add(GradedDims& g, int degree, std::int64_t dim) {
    if (dim == 0) return;
    if ((g[degree] += dim) == 0) g.erase(degree);
}

}  // namespace

GradedDims ext_bundles(const MixedBundle& a, const MixedBundle& b, int k, int N) {
    if (static_cast<int>(a.v.rank()) != k || static_cast<int>(b.v.rank()) != k ||
        static_cast<int>(a.q.rank()) != N - k || static_cast<int>(b.q.rank()) != N - k)
        throw ArityError("rank mismatch");
    GradedDims out;
    const auto qs = gl_tensor(gl_dual(a.q), b.q);
    const auto vs = gl_tensor(gl_dual(a.v), b.v);
    for (const auto& [q, cq] : qs)
        for (const auto& [v, cv] : vs)
            if (auto h = grassmann_cohomology(q, v, N)) add(out, h->degree, cq * cv * weyl_dimension(h->weight));
    return out;
}

GradedDims ext_V(const YoungDiagram& lambda, const YoungDiagram& mu, int k, int N) {
    check_box(lambda, N - k, k);
    check_box(mu, N - k, k);
    const auto zero = RationalWeight::zero(static_cast<std::size_t>(N - k));
    return ext_bundles({zero, RationalWeight::from_diagram(lambda, k)}, {zero, RationalWeight::from_diagram(mu, k)}, k,
                       N);
}

GradedDims ext_Q(const YoungDiagram& mu, const YoungDiagram& mu2, int k, int N) {
    check_box(mu, k, N - k);
    check_box(mu2, k, N - k);
    const auto zero = RationalWeight::zero(static_cast<std::size_t>(k));
    return ext_bundles({RationalWeight::from_diagram(mu, N - k), zero}, {RationalWeight::from_diagram(mu2, N - k), zero},
                       k, N);
}

GradedDims dual_pairing(const YoungDiagram& mu, const YoungDiagram& lambda, int k, int N) {
    check_box(mu, k, N - k);
    check_box(lambda, N - k, k);
    const GradedDims raw =
        ext_bundles({RationalWeight::from_diagram(mu, N - k), RationalWeight::zero(k)},
                    {RationalWeight::zero(N - k), RationalWeight::from_diagram(lambda, k)}, k, N);
    GradedDims out;
    for (const auto& [d, dim] : raw) out[d - mu.size()] = dim;
    return out;
}

std::optional<Cohomology> proj_push_line(int i, int n) {
    if (n < 1) throw std::invalid_argument("proj_push_line needs n >= 1");
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    if (i >= 0) {
        w[0] = i;
        return Cohomology{RationalWeight(std::move(w)), 0};
    }
    if (i >= 1 - n) return std::nullopt;
    // Sym^{-i-n}(V^dual) (x) det(V)^{-1}
    std::fill(w.begin(), w.end(), -1);
    w.back() = i + n - 1;
    return Cohomology{RationalWeight(std::move(w)), n - 1};
}

MixedBundle canonical_bundle(int k, int N) {
    return {RationalWeight::zero(static_cast<std::size_t>(N - k)),
            RationalWeight(std::vector<int>(static_cast<std::size_t>(k), N))};
}

std::int64_t total_dim(const GradedDims& g) {
    std::int64_t s = 0;
    for (const auto& [d, dim] : g) s += dim;
    return s;
}

std::int64_t euler_characteristic(const GradedDims& g) {
    std::int64_t s = 0;
    for (const auto& [d, dim] : g) s += (d % 2 == 0 ? dim : -dim);
    return s;
}

std::string str(const GradedDims& g) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [d, dim] : g) {
        os << (first ? "" : ", ") << d << ':' << dim;
        first = false;
    }
    os << '}';
    return os.str();
}

FlagExt flag_ext(std::span<const YoungDiagram> a, std::span<const YoungDiagram> b, std::span<const int> kvec) {
    const std::size_t n = kvec.size();
    if (n < 2 || a.size() != n - 1 || b.size() != n - 1) throw ArityError("tuple arity");
    // Push down the tower Fl -> ... -> Gr(dim V_{n-1}, N) -> pt one relative
    // Grassmannian at a time. Each summand is irreducible, so every step is exact.
    using State = std::map<std::pair<RationalWeight, int>, std::int64_t>;  // (weight on V_i, degree)
    State state{{{RationalWeight{}, 0}, 1}};
    int dim_i = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const int rank = dim_i + kvec[i - 1];
        State pushed;
        for (const auto& [key, m] : state) {
            std::vector<int> w(static_cast<std::size_t>(kvec[i - 1]), 0);
            w.insert(w.end(), key.first.entries().begin(), key.first.entries().end());
            if (auto h = bott_normalize(w)) pushed[{h->weight, key.second + h->degree}] += m;
        }
        dim_i = rank;
        if (i == n) {
            state = std::move(pushed);
            break;
        }
        const auto r = static_cast<std::size_t>(rank);
        const auto prod = gl_tensor(gl_dual(RationalWeight::from_diagram(a[i - 1], r)), RationalWeight::from_diagram(b[i - 1], r));
        state.clear();
        for (const auto& [key, m] : pushed)
            for (const auto& [tau, c] : prod)
                for (const auto& [w, c2] : gl_tensor(key.first, tau)) state[{w, key.second}] += m * c * c2;
    }
    FlagExt out;
    for (const auto& [key, m] : state) {
        const std::int64_t d = m * weyl_dimension(key.first);
        add(out.dims, key.second, d);
        out.euler += key.second % 2 == 0 ? d : -d;
    }
    return out;
}

}  // namespace szero
