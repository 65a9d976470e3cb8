#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace partcmp {

/// A real-valued index result, or an explicit "undefined" carrying the
/// reason (e.g. "P = 0"). Undefined is a value, not an error: degenerate
/// partitions are legal inputs everywhere in this library, and no index
/// computation throws or produces NaN.
struct IndexValue {
    std::optional<double> value;
    std::string reason;  // nonempty iff undefined

    bool defined() const { return value.has_value(); }

    static IndexValue of(double v) { return {v, {}}; }
    static IndexValue undefined(std::string why) { return {std::nullopt, std::move(why)}; }
};

/// Statistics for a single cluster: its own agreement index (w_i or v_j),
/// the chance-corrected counterpart (Aw_i or Av_j), and its absolute and
/// relative weight in the overall index.
struct ClusterStat {
    std::string cluster;
    IndexValue value;        // w_i or v_j
    IndexValue adjusted;     // Aw_i or Av_j
    std::int64_t pairs = 0;  // P_i or Q_j
    IndexValue weight;       // p_i or q_j
};

/// One index evaluated along both published routes: from the 2x2 pair
/// counts (formula 1) and as a function of the asymmetric base indices
/// (formula 2). The two agree within rounding whenever both are defined.
struct IndexForms {
    IndexValue formula1;
    IndexValue formula2;
};

/// A weighted-average identity: overall index, the per-cluster terms, and
/// the observed residual |overall - weighted mean|. The residual is
/// undefined (with reason) when a term with nonzero weight is undefined.
struct Decomposition {
    IndexValue overall;
    std::vector<ClusterStat> per_cluster;
    IndexValue residual;
};

}  // namespace partcmp
