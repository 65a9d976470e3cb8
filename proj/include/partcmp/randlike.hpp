#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "partcmp/core.hpp"
#include "partcmp/index_value.hpp"

namespace partcmp {

/// W* = d / (c + d): the proportion of pairs separated in the second
/// partition that are also separated in the first. Undefined when N = P.
IndexValue wallace_w_star(const PairCounts& pc);

/// V* = d / (b + d), the mirror of W*. Undefined when N = Q.
IndexValue wallace_v_star(const PairCounts& pc);

/// The Rand index (a + d) / N. Undefined when N = 0 (fewer than 2 objects).
IndexValue rand_index(const PairCounts& pc);

struct RandPart {
    std::string name;     // wallace_w, wallace_v, wallace_w_star, wallace_v_star
    IndexValue value;
    std::int64_t weight;  // P, Q, N - P, N - Q
    double share;         // weight / N
};

/// The Rand index as a weighted average of W, V, W*, V* with their own
/// denominators as weights, plus the refinement that expands W and V into
/// their per-cluster terms. An undefined part is skipped only when its
/// weight is exactly 0; otherwise the residual is reported not-checkable.
struct RandDecomposition {
    std::array<RandPart, 4> parts;
    IndexValue overall;
    IndexValue residual;
    std::vector<ClusterStat> row_terms;  // w_i with weights P_i
    std::vector<ClusterStat> col_terms;  // v_j with weights Q_j
};

RandDecomposition rand_decomposition(const MatchingTable& m);

/// The eight indices that are increasing functions of W, V, W*, V*.
/// Keys: rand, rogers_tanimoto, hamann, sokal_sneath_2,
/// sokal_sneath_geometric, sokal_sneath_arithmetic, rogot_goldberg,
/// warrens_harmonic.
std::map<std::string, IndexForms> rand_family_forms(const PairCounts& pc);

std::map<std::string, IndexValue> rand_family_indices(const PairCounts& pc);

}  // namespace partcmp
