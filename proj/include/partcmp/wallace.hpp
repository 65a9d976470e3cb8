#pragma once

#include <map>
#include <string>
#include <vector>

#include "partcmp/core.hpp"
#include "partcmp/index_value.hpp"

namespace partcmp {

/// W = T / P: the proportion of pairs joined in the first partition that
/// are also joined in the second. Undefined when P = 0.
IndexValue wallace_w(const PairCounts& pc);

/// V = T / Q, the mirror of W for the second partition.
IndexValue wallace_v(const PairCounts& pc);

/// Per-row cluster indices w_i: the proportion of pairs inside cluster
/// U_i that the second partition joins. Rows with fewer than two objects
/// are flagged undefined ("singleton") and carry weight 0; the `adjusted`
/// field is left unset here (see per_cluster_aw).
std::vector<ClusterStat> per_cluster_w(const MatchingTable& m);

/// Column mirror: v_j with weights Q_j, q_j.
std::vector<ClusterStat> per_cluster_v(const MatchingTable& m);

struct WallaceDecompositions {
    Decomposition w;  // W = sum_i w_i p_i
    Decomposition v;  // V = sum_j v_j q_j
};

/// The weighted-average identities for W and V, with observed residuals.
WallaceDecompositions wallace_decompositions(const MatchingTable& m);

/// The Dice index as one weighted mean over rows and columns together,
/// with the pair counts P_i, Q_j as weights.
Decomposition dice_decomposition(const MatchingTable& m);

/// The twelve indices that are increasing functions of W and V, each
/// evaluated along both formula routes. Keys are the stable index names
/// (jaccard, dice, kulczynski, braun_blanquet, simpson,
/// ochiai_fowlkes_mallows, sorgenfrei, sokal_sneath_1, mcconnaughey,
/// johnson, van_der_maarel, legendre).
std::map<std::string, IndexForms> wallace_family_forms(const PairCounts& pc);

/// Single value per index: the pair-count route when its denominator is
/// nonzero, otherwise the W/V route; undefined only when both fail.
std::map<std::string, IndexValue> wallace_family_indices(const PairCounts& pc);

}  // namespace partcmp
