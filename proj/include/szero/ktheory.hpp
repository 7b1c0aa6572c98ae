#pragma once

// Decategorified oracle: functor words evaluated to Schur-bundle complexes by
// relative Bott pushforward, and generator actions on K(Gr(k,N)) as exact
// integer matrices in the basis {[S_lambda V] : lambda in P(N-k,k)}.

#include "szero/algebra.hpp"
#include "szero/bott.hpp"

#include <map>
#include <string>
#include <vector>

namespace szero {

struct FormalComplex {
    int k = 0;
    int N = 0;
    /// (bundle, degree) -> multiplicity
    std::map<std::pair<MixedBundle, int>, std::int64_t> terms;

    bool empty() const { return terms.empty(); }
    std::string str() const;
    friend bool operator==(const FormalComplex&, const FormalComplex&) = default;
};

/// F_{lambda_1} * ... * F_{lambda_k} 1_{(0,N)} as a complex on Gr(k,N).
FormalComplex eval_F_word(const YoungDiagram& lambda, int k, int N);
/// E_{-mu_1} * ... * E_{-mu_{N-k}} 1_{(N,0)} as a complex on Gr(k,N).
FormalComplex eval_E_word(const YoungDiagram& mu, int k, int N);
/// Evaluates an n=2 word made of letters only, starting at (0,N) with F's or
/// at (N,0) with E's. nullopt for shapes the oracle does not model.
std::optional<FormalComplex> eval_word(const Word& w);

/// Signed K-theory class on Gr(k,N): bundle -> coefficient.
using KClass = std::map<MixedBundle, std::int64_t>;

/// Coordinates of a class in the Schur basis of K(Gr(k,N)) ordered by enumerate_P(N-k,k).
std::vector<std::int64_t> schur_coordinates(const KClass& x, int k, int N);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct GeneratorMatrix {
    GenToken token;
    WeightVector source;
    WeightVector target;  // empty when the target weight is invalid
    std::vector<YoungDiagram> source_basis;
    std::vector<YoungDiagram> target_basis;
    IntMatrix matrix;  // rows: target basis, columns: source basis

    std::string dump() const;
};

/// n = 2 only. Throws for n >= 3.
GeneratorMatrix euler_matrix(const GenToken& g, const WeightVector& source);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner);
IntMatrix identity_matrix(std::size_t n);

struct RelationResult {
    std::string id;
    bool pass = true;
    std::int64_t checked = 0;
    std::string witness;  // first failure
};

/// Relation ids: U01 U03 U04 U05 U06 U07 U09-interior U09-boundary.
RelationResult check_relation(const std::string& id, int N);
const std::vector<std::string>& relation_ids();
bool relation_in_scope(const std::string& id);

struct CrossCheck {
    enum class Status { Agree, Mismatch, EngineIncomplete };
    Status status = Status::Agree;
    Verdict verdict;
    GradedDims ext;
    std::string str() const;
};

/// Engine verdict for Hom(F_lambda 1, F_lambda' 1) against Ext(S_lambda V, S_lambda' V).
CrossCheck cross_check(const YoungDiagram& lambda, const YoungDiagram& lambda2, int k, int N);
/// Same for Hom(E_{-mu} 1, E_{-mu'} 1) against Ext(S_mu Q^dual, S_mu' Q^dual).
CrossCheck cross_check_E(const YoungDiagram& mu, const YoungDiagram& mu2, int k, int N);
/// Expected graded dims for a verdict: IsoIdentity(s) -> {-s:1}, ProvenZero -> {}.
std::optional<GradedDims> verdict_dims(const Verdict& v);

}  // namespace szero
