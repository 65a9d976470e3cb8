#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "partcmp/core.hpp"
#include "partcmp/index_value.hpp"

namespace partcmp {

/// The four Rand-average weights, absolute and as shares of N.
struct WeightSummary {
    std::int64_t P = 0;
    std::int64_t Q = 0;
    std::int64_t N_minus_P = 0;
    std::int64_t N_minus_Q = 0;
    bool shares_defined = false;  // false when N = 0
    double p_share = 0;           // P / N
    double q_share = 0;           // Q / N
    double np_share = 0;          // (N - P) / N
    double nq_share = 0;          // (N - Q) / N
};

using NamedValues = std::vector<std::pair<std::string, IndexValue>>;

/// Everything computed for one pair of partitions: all overall indices in
/// canonical order, per-cluster row/column statistics, the weight
/// summary, and the observed decomposition residuals.
struct IndexReport {
    std::int64_t n = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    PairCounts counts;
    NamedValues overall;
    std::vector<ClusterStat> row_stats;
    std::vector<ClusterStat> col_stats;
    WeightSummary weights;
    NamedValues residuals;
};

/// The canonical overall-index order used by every renderer: the four
/// asymmetric base indices, the W/V family, the Rand family, then the
/// adjusted family.
const std::vector<std::string>& all_index_names();

IndexReport build_report(const MatchingTable& m);

/// Pipeline entry point for raw label sequences. Throws
/// std::invalid_argument on empty or length-mismatched input.
IndexReport compare_labels(const std::vector<std::string>& u_labels,
                           const std::vector<std::string>& z_labels);

const IndexValue* find_value(const NamedValues& values, const std::string& name);

struct RenderOptions {
    std::string format = "text";        // text | json | csv
    int precision = 2;                  // text only
    bool per_cluster = true;            // include row/column panels
    std::vector<std::string> indices;   // subset of overall names; empty = all
};

/// Renders per options. Text rounds at display time only; json and csv
/// carry full precision (json round-trips every double bit-for-bit).
/// Throws std::invalid_argument on an unknown format or index name.
std::string render(const IndexReport& report, const RenderOptions& options);

std::string render_text(const IndexReport& report, const RenderOptions& options);
std::string render_json(const IndexReport& report, const RenderOptions& options);
std::string render_csv(const IndexReport& report, const RenderOptions& options);

}  // namespace partcmp
