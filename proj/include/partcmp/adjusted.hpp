#pragma once

#include <map>
#include <string>
#include <vector>

#include "partcmp/core.hpp"
#include "partcmp/index_value.hpp"
#include "partcmp/rational.hpp"

namespace partcmp {

/// Expected pair agreements under the fixed-margins null model, as exact
/// rationals: E(T) = PQ / N overall and P_i Q_j / N per cell. The per-cell
/// values sum exactly to E(T).
struct Expectation {
    Rational expected_t;
    std::vector<Rational> per_cell;  // row-major, rows x cols
    std::size_t rows = 0;
    std::size_t cols = 0;
};

Expectation expectation(const MatchingTable& m);

Rational expected_t(const PairCounts& pc);     // PQ / N
Rational expected_rand(const PairCounts& pc);  // (N^2 + 2PQ - N(P + Q)) / N^2
Rational expected_dice(const PairCounts& pc);  // 2PQ / (N(P + Q))

/// AS = (S - E(S)) / (1 - E(S)): rescales an index to 0 under the null
/// model and 1 at perfect agreement. Undefined when E(S) = 1; an
/// undefined input passes through unchanged.
IndexValue chance_correct(const IndexValue& s, const Rational& expected);

/// AW = (NT - PQ) / (P(N - Q)), the chance-corrected W. The numerator is
/// formed in 128-bit integers before the one division. Undefined when
/// P = 0 or Q = N.
IndexValue adjusted_w(const PairCounts& pc);

/// AV = (NT - PQ) / (Q(N - P)), the mirror of AW.
IndexValue adjusted_v(const PairCounts& pc);

/// AR = 2(NT - PQ) / (N(P + Q) - 2PQ), the harmonic mean of AW and AV.
/// Undefined when the denominator is 0.
IndexValue adjusted_rand(const PairCounts& pc);

/// Chance-corrected per-row indices Aw_i, alongside w_i and the row
/// weights (both `value` and `adjusted` are filled). Singleton rows and
/// Q = N are flagged undefined.
std::vector<ClusterStat> per_cluster_aw(const MatchingTable& m);

/// Column mirror: Av_j (undefined on singleton columns and when P = N).
std::vector<ClusterStat> per_cluster_av(const MatchingTable& m);

struct AdjustedDecompositions {
    Decomposition aw;  // AW = sum_i Aw_i p_i
    Decomposition av;  // AV = sum_j Av_j q_j
    // AR as one weighted mean over rows and columns together. Each term
    // is weighted by its own chance-correction denominator, P_i(N - Q)
    // for rows and Q_j(N - P) for columns, which makes the identity
    // exact; the ClusterStats still report the plain p_i / q_j.
    Decomposition ar;
};

AdjustedDecompositions adjusted_decompositions(const MatchingTable& m);

/// The five indices that are increasing functions of AW and AV.
/// Keys: doolittle, yule_phi, loevinger, adjusted_rand, fleiss.
/// yule_phi is the signed pair-count form (ad - bc) / sqrt(...); the
/// sqrt(AW * AV) route matches it only when ad - bc >= 0. loevinger is
/// max(AW, AV); its pair-count form diverges in the same signed cases.
std::map<std::string, IndexForms> adjusted_family_forms(const PairCounts& pc);

/// All five undefined (with reason) when AW or AV is undefined.
std::map<std::string, IndexValue> adjusted_family_indices(const PairCounts& pc);

}  // namespace partcmp
