#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "partcmp/rational.hpp"

namespace partcmp {

/// C(x, 2) as an exact integer; 0 for x < 2.
inline std::int64_t comb2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

/// One exact integer division, rounded once to double.
inline double ratio(int128 num, int128 den) {
    return static_cast<double>(num) / static_cast<double>(den);
}

/// A labeling of n objects into clusters. Cluster identifiers are kept in
/// order of first appearance in the label stream, which fixes row/column
/// order everywhere downstream.
struct Partition {
    std::vector<std::int32_t> labels;      // dense cluster index per object
    std::vector<std::string> cluster_ids;  // order of first appearance
    std::vector<std::int64_t> sizes;       // per cluster, same order

    std::int64_t n() const { return static_cast<std::int64_t>(labels.size()); }
    std::size_t cluster_count() const { return cluster_ids.size(); }
};

/// Throws std::invalid_argument("empty partition") on empty input.
Partition partition_from_labels(std::span<const std::string> labels);
Partition partition_from_labels(const std::vector<std::string>& labels);

/// The I x J contingency table cross-tabulating two partitions of the
/// same objects. Cells, totals and n are exact integers. Immutable by
/// convention after construction.
struct MatchingTable {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> cells;  // row-major
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::int64_t> row_totals;
    std::vector<std::int64_t> col_totals;
    std::int64_t n = 0;

    std::int64_t cell(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }
};

/// Builds a table from raw cells, computing totals. Labels default to
/// U1..UI / Z1..ZJ. Throws std::invalid_argument on an empty matrix,
/// ragged rows, negative cells, or label/shape mismatch.
MatchingTable table_from_cells(const std::vector<std::vector<std::int64_t>>& cells,
                               std::vector<std::string> row_labels = {},
                               std::vector<std::string> col_labels = {});

/// Cross-tabulates two same-length partitions; cell (i, j) counts the
/// objects in cluster i of u and cluster j of z. Throws
/// std::invalid_argument("partition length mismatch") on length mismatch.
MatchingTable build_matching_table(const Partition& u, const Partition& z);

MatchingTable transpose(const MatchingTable& m);

/// Sum over each row (column) of C(n_ij, 2): the pairs of that cluster
/// that the other partition also joins.
std::vector<std::int64_t> row_pair_sums(const MatchingTable& m);
std::vector<std::int64_t> col_pair_sums(const MatchingTable& m);

/// The 2x2 summary of a matching table. Representation 1 (a, b, c, d) and
/// representation 2 (N, T, P, Q) are kept together; a = T, b = P - T,
/// c = Q - T, d = N + T - P - Q, all exact.
struct PairCounts {
    std::int64_t N = 0;  // n(n-1)/2, all object pairs
    std::int64_t T = 0;  // pairs joined in both partitions
    std::int64_t P = 0;  // pairs joined in the first partition
    std::int64_t Q = 0;  // pairs joined in the second partition
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t d = 0;
};

PairCounts pair_counts(const MatchingTable& m);

/// Rebuilds the full count set from representation 1. Used by symmetry
/// tests that swap the roles of joined/separated pairs.
PairCounts pair_counts_from_abcd(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// Classifies every one of the C(n, 2) object pairs directly, in O(n^2).
/// The independent reference implementation for pair_counts.
PairCounts oracle_pair_counts(const Partition& u, const Partition& z);

/// Absolute weights P_i = C(n_i+, 2), Q_j = C(n_+j, 2) and their
/// normalized forms p_i = P_i / P, q_j = Q_j / Q. The relative weights
/// are undefined (flag false) when the corresponding total is zero.
struct ClusterWeights {
    std::vector<std::int64_t> row_pairs;  // P_i
    std::vector<std::int64_t> col_pairs;  // Q_j
    std::vector<double> row_rel;          // p_i, meaningful iff row_rel_defined
    std::vector<double> col_rel;          // q_j, meaningful iff col_rel_defined
    bool row_rel_defined = false;
    bool col_rel_defined = false;
    std::int64_t P = 0;
    std::int64_t Q = 0;
};

ClusterWeights cluster_weights(const MatchingTable& m);

}  // namespace partcmp
