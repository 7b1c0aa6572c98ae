#pragma once

// Collections of functor words whose images should form semiorthogonal
// decompositions, and certificates assembled from engine verdicts.

#include "szero/algebra.hpp"
#include "szero/partitions.hpp"

#include <string>
#include <vector>

namespace szero {

enum class Side { F, E };
std::string str(Side s);

struct CollectionSpec {
    int n = 2;
    int N = 2;
    WeightVector target;  // k̲
    Side side = Side::F;

    /// F-side source (0,...,0,N); E-side source (N,0).
    WeightVector source() const;
    void validate() const;
};

CollectionSpec grassmannian_spec(int k, int N, Side side);

using CollectionIndex = std::vector<YoungDiagram>;
std::string str(const CollectionIndex& t);

/// Index set in ascending product-lex order.
std::vector<CollectionIndex> index_set(const CollectionSpec& spec);
std::int64_t multinomial(const WeightVector& k);

Word build_word(const CollectionSpec& spec, const CollectionIndex& t);

struct PairRecord {
    std::size_t left = 0;   // Hom(W_left, W_right)
    std::size_t right = 0;
    bool claimed = true;    // false for the no-claim direction
    Verdict verdict;
    std::vector<RewriteStep> log;
    std::uint64_t digest = 0;
};

enum class CertStatus { Valid, Invalid, Incomplete };
std::string str(CertStatus s);

struct SodCertificate {
    CollectionSpec spec;
    std::vector<CollectionIndex> members;
    std::vector<PairRecord> self;
    std::vector<PairRecord> pairs;
    std::string complement;
    CertStatus status = CertStatus::Incomplete;
};

struct VerifyOptions {
    int jobs = 1;
    int max_steps = 0;
    bool diagnostic = false;  // also run t >_pl t' pairs
    bool record = true;
};

/// Hom(W_t, W_u) reduced to a verdict: simplify(R(W_t) ∘ W_u).
PairRecord hom_verdict(const CollectionSpec& spec, const std::vector<CollectionIndex>& members, std::size_t t,
                       std::size_t u, const VerifyOptions& opts);

SodCertificate verify_collection(const CollectionSpec& spec, const VerifyOptions& opts = {});

CertStatus certificate_status(const SodCertificate& cert);
std::vector<bool> fully_faithful_report(const SodCertificate& cert);

}  // namespace szero
