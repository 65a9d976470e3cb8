#include "partcmp/core.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace partcmp {

namespace {

// Keeps N = C(n, 2) and every count product within exact range.
constexpr std::int64_t kMaxObjects = 3'000'000'000;

std::vector<std::string> default_labels(const char* prefix, std::size_t count) {
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) out.push_back(prefix + std::to_string(k + 1));
    return out;
}

}  // namespace

Partition partition_from_labels(std::span<const std::string> labels) {
    if (labels.empty()) throw std::invalid_argument("empty partition");
    Partition p;
    p.labels.reserve(labels.size());
    std::unordered_map<std::string, std::int32_t> index;
    index.reserve(labels.size());
    for (const auto& label : labels) {
        auto [it, inserted] = index.emplace(label, static_cast<std::int32_t>(p.cluster_ids.size()));
        if (inserted) {
            p.cluster_ids.push_back(label);
            p.sizes.push_back(0);
        }
        p.labels.push_back(it->second);
        ++p.sizes[it->second];
    }
    return p;
}

Partition partition_from_labels(const std::vector<std::string>& labels) {
    return partition_from_labels(std::span<const std::string>(labels));
}

MatchingTable table_from_cells(const std::vector<std::vector<std::int64_t>>& cells,
                               std::vector<std::string> row_labels,
                               std::vector<std::string> col_labels) {
    if (cells.empty() || cells.front().empty()) throw std::invalid_argument("empty table");
    MatchingTable m;
    m.rows = cells.size();
    m.cols = cells.front().size();
    if (!row_labels.empty() && row_labels.size() != m.rows)
        throw std::invalid_argument("row label count does not match row count");
    if (!col_labels.empty() && col_labels.size() != m.cols)
        throw std::invalid_argument("column label count does not match column count");
    m.row_labels = row_labels.empty() ? default_labels("U", m.rows) : std::move(row_labels);
    m.col_labels = col_labels.empty() ? default_labels("Z", m.cols) : std::move(col_labels);
    m.cells.reserve(m.rows * m.cols);
    m.row_totals.assign(m.rows, 0);
    m.col_totals.assign(m.cols, 0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (cells[i].size() != m.cols) throw std::invalid_argument("ragged table rows");
        for (std::size_t j = 0; j < m.cols; ++j) {
            std::int64_t value = cells[i][j];
            if (value < 0) throw std::invalid_argument("negative table cell");
            m.cells.push_back(value);
            m.row_totals[i] += value;
            m.col_totals[j] += value;
            m.n += value;
        }
    }
    if (m.n > kMaxObjects) throw std::invalid_argument("object count too large");
    return m;
}

MatchingTable build_matching_table(const Partition& u, const Partition& z) {
    if (u.n() != z.n()) throw std::invalid_argument("partition length mismatch");
    MatchingTable m;
    m.rows = u.cluster_count();
    m.cols = z.cluster_count();
    m.row_labels = u.cluster_ids;
    m.col_labels = z.cluster_ids;
    m.cells.assign(m.rows * m.cols, 0);
    m.row_totals = u.sizes;
    m.col_totals = z.sizes;
    m.n = u.n();
    for (std::int64_t k = 0; k < u.n(); ++k)
        ++m.cells[static_cast<std::size_t>(u.labels[k]) * m.cols + z.labels[k]];
    return m;
}

MatchingTable transpose(const MatchingTable& m) {
    MatchingTable t;
    t.rows = m.cols;
    t.cols = m.rows;
    t.row_labels = m.col_labels;
    t.col_labels = m.row_labels;
    t.row_totals = m.col_totals;
    t.col_totals = m.row_totals;
    t.n = m.n;
    t.cells.assign(m.cells.size(), 0);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.cells[j * t.cols + i] = m.cell(i, j);
    return t;
}

std::vector<std::int64_t> row_pair_sums(const MatchingTable& m) {
    std::vector<std::int64_t> sums(m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) sums[i] += comb2(m.cell(i, j));
    return sums;
}

std::vector<std::int64_t> col_pair_sums(const MatchingTable& m) {
    std::vector<std::int64_t> sums(m.cols, 0);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) sums[j] += comb2(m.cell(i, j));
    return sums;
}

PairCounts pair_counts(const MatchingTable& m) {
    PairCounts pc;
    pc.N = comb2(m.n);
    for (std::int64_t cell : m.cells) pc.T += comb2(cell);
    for (std::int64_t total : m.row_totals) pc.P += comb2(total);
    for (std::int64_t total : m.col_totals) pc.Q += comb2(total);
    pc.a = pc.T;
    pc.b = pc.P - pc.T;
    pc.c = pc.Q - pc.T;
    pc.d = pc.N + pc.T - pc.P - pc.Q;
    return pc;
}

PairCounts pair_counts_from_abcd(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    PairCounts pc;
    pc.a = a;
    pc.b = b;
    pc.c = c;
    pc.d = d;
    pc.T = a;
    pc.P = a + b;
    pc.Q = a + c;
    pc.N = a + b + c + d;
    return pc;
}

PairCounts oracle_pair_counts(const Partition& u, const Partition& z) {
    if (u.n() != z.n()) throw std::invalid_argument("partition length mismatch");
    std::int64_t a = 0, b = 0, c = 0, d = 0;
    const std::int64_t n = u.n();
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i + 1; j < n; ++j) {
            const bool joined_u = u.labels[i] == u.labels[j];
            const bool joined_z = z.labels[i] == z.labels[j];
            if (joined_u && joined_z)
                ++a;
            else if (joined_u)
                ++b;
            else if (joined_z)
                ++c;
            else
                ++d;
        }
    }
    return pair_counts_from_abcd(a, b, c, d);
}

ClusterWeights cluster_weights(const MatchingTable& m) {
    ClusterWeights cw;
    cw.row_pairs.reserve(m.rows);
    cw.col_pairs.reserve(m.cols);
    for (std::int64_t total : m.row_totals) {
        cw.row_pairs.push_back(comb2(total));
        cw.P += cw.row_pairs.back();
    }
    for (std::int64_t total : m.col_totals) {
        cw.col_pairs.push_back(comb2(total));
        cw.Q += cw.col_pairs.back();
    }
    cw.row_rel_defined = cw.P > 0;
    cw.col_rel_defined = cw.Q > 0;
    cw.row_rel.assign(m.rows, 0.0);
    cw.col_rel.assign(m.cols, 0.0);
    if (cw.row_rel_defined)
        for (std::size_t i = 0; i < m.rows; ++i)
            cw.row_rel[i] = static_cast<double>(cw.row_pairs[i]) / static_cast<double>(cw.P);
    if (cw.col_rel_defined)
        for (std::size_t j = 0; j < m.cols; ++j)
            cw.col_rel[j] = static_cast<double>(cw.col_pairs[j]) / static_cast<double>(cw.Q);
    return cw;
}

}  // namespace partcmp
