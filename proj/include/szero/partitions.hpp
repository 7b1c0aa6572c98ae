#pragma once

// Young-diagram combinatorics: index boxes P(a,b), lexicographic orders,
// and the GL_k tensor/branching calculus behind Schur functors.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace szero {

/// Weakly decreasing nonnegative sequence, trailing zeros trimmed.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> parts);
    YoungDiagram(std::initializer_list<int> parts) : YoungDiagram(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    /// Number of nonzero rows.
    std::size_t length() const { return parts_.size(); }
    int size() const;
    /// Part i (0-based); zero beyond the last row.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    /// Parts padded with zeros to exactly `len` entries.
    std::vector<int> padded(std::size_t len) const;
    YoungDiagram transpose() const;
    bool fits(int a, int b) const { return parts_.empty() || (parts_[0] <= a && static_cast<int>(length()) <= b); }

    std::string str() const;

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    friend auto operator<=>(const YoungDiagram& x, const YoungDiagram& y) { return x.parts_ <=> y.parts_; }

private:
    std::vector<int> parts_;
};

/// Dominant GL_k weight; the length is the rank and is never trimmed.
class RationalWeight {
public:
    RationalWeight() = default;
    explicit RationalWeight(std::vector<int> entries);
    RationalWeight(std::initializer_list<int> entries) : RationalWeight(std::vector<int>(entries)) {}
    static RationalWeight zero(std::size_t rank) { return RationalWeight(std::vector<int>(rank, 0)); }
    static RationalWeight from_diagram(const YoungDiagram& d, std::size_t rank);

    const std::vector<int>& entries() const { return entries_; }
    std::size_t rank() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int size() const;
    bool is_zero() const;
    /// Adds c to every entry (a determinant twist).
    RationalWeight twisted(int c) const;
    std::string str() const;

    friend bool operator==(const RationalWeight&, const RationalWeight&) = default;
    friend auto operator<=>(const RationalWeight& x, const RationalWeight& y) { return x.entries_ <=> y.entries_; }

private:
    std::vector<int> entries_;
};

using WeightMultiset = std::map<RationalWeight, std::int64_t>;

struct DiagramBox {
    int a = 0;  // max part
    int b = 0;  // max length
};

struct BranchTerm {
    RationalWeight sub;  // rank k-1
    int line_exponent = 0;
    friend bool operator==(const BranchTerm&, const BranchTerm&) = default;
    friend auto operator<=>(const BranchTerm&, const BranchTerm&) = default;
};

class ArityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::int64_t binomial(int n, int k);

/// All diagrams in P(a,b) sorted ascending by lex_compare.
std::vector<YoungDiagram> enumerate_P(DiagramBox box);

std::strong_ordering lex_compare(const YoungDiagram& x, const YoungDiagram& y);
std::strong_ordering prodlex_compare(std::span<const YoungDiagram> t, std::span<const YoungDiagram> u);

/// Littlewood-Richardson coefficient c^nu_{lambda,mu} for ordinary partitions.
std::int64_t lr_coefficient(const YoungDiagram& lambda, const YoungDiagram& mu, const YoungDiagram& nu);

/// s_lambda * s_mu restricted to at most `max_rows` rows.
std::map<YoungDiagram, std::int64_t> lr_product(const YoungDiagram& lambda, const YoungDiagram& mu,
                                                std::size_t max_rows);

/// Decomposition of S_a(C^k) (x) S_b(C^k).
WeightMultiset gl_tensor(const RationalWeight& a, const RationalWeight& b);
RationalWeight gl_dual(const RationalWeight& a);
/// Restriction GL_k -> GL_{k-1} x GL_1.
std::vector<BranchTerm> gl_branch(const RationalWeight& lambda);

/// Restriction GL_{p+q} -> GL_p x GL_q: multiset of (weight on first, weight on second).
std::map<std::pair<RationalWeight, RationalWeight>, std::int64_t> gl_restrict(const RationalWeight& lambda,
                                                                              std::size_t p);

/// Weyl dimension of S_w(C^rank) for dominant w.
std::int64_t weyl_dimension(const RationalWeight& w);

}  // namespace szero
