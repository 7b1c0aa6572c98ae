#pragma once

// Borel-Weil-Bott on Grassmannians and partial flag varieties of C^N.
//
// Gr(k,N) parametrizes V subset C^N with dim V = k and Q = C^N/V. A bundle
// S_a Q (x) S_b V is encoded by the concatenated weight (a | b), quotient
// first. For flags 0 = V_0 < V_1 < ... < V_{n-1} < C^N the graded pieces
// G_j = V_j/V_{j-1} are concatenated top-down (G_n | ... | G_1).

#include "szero/partitions.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace szero {

struct Cohomology {
    RationalWeight weight;  // dominant GL_N weight
    int degree = 0;
    friend bool operator==(const Cohomology&, const Cohomology&) = default;
};

/// Degree -> dimension. Zero entries are never stored, so "all zero" is empty.
using GradedDims = std::map<int, std::int64_t>;

/// Dotted Weyl normalization; nullopt when w + rho is singular.
std::optional<Cohomology> bott_normalize(std::span<const int> w);

/// H^*(Gr(k,N), S_alpha Q (x) S_beta V) with rank(alpha) = N-k, rank(beta) = k.
std::optional<Cohomology> grassmann_cohomology(const RationalWeight& alpha, const RationalWeight& beta, int N);

/// Homogeneous bundle S_q Q (x) S_v V on a Grassmannian.
struct MixedBundle {
    RationalWeight q;
    RationalWeight v;
    friend bool operator==(const MixedBundle&, const MixedBundle&) = default;
    friend auto operator<=>(const MixedBundle&, const MixedBundle&) = default;
};

/// Ext^*(a, b) on Gr(k,N) for arbitrary (not necessarily polynomial) weights.
GradedDims ext_bundles(const MixedBundle& a, const MixedBundle& b, int k, int N);

GradedDims ext_V(const YoungDiagram& lambda, const YoungDiagram& mu, int k, int N);
GradedDims ext_Q(const YoungDiagram& mu, const YoungDiagram& mu2, int k, int N);

/// Ext^*(S_mu Q[-|mu|], S_lambda V), degrees already reindexed by the shift.
GradedDims dual_pairing(const YoungDiagram& mu, const YoungDiagram& lambda, int k, int N);

/// Pushforward of O(i) from P^{n-1} to a point, written as a GL_n weight.
std::optional<Cohomology> proj_push_line(int i, int n);

/// Canonical bundle of Gr(k,N) as a mixed bundle: (det V)^N.
MixedBundle canonical_bundle(int k, int N);

std::int64_t total_dim(const GradedDims& g);
std::int64_t euler_characteristic(const GradedDims& g);
std::string str(const GradedDims& g);

/// Ext between Kapranov bundles (x)_i S_{a_i} V_i on the flag variety of type k̲,
/// computed by pushing down the tower of relative Grassmannians.
struct FlagExt {
    GradedDims dims;
    std::int64_t euler = 0;
};
FlagExt flag_ext(std::span<const YoungDiagram> a, std::span<const YoungDiagram> b, std::span<const int> kvec);

}  // namespace szero
