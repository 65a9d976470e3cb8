#include "partcmp/synth.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <tuple>

namespace partcmp {

namespace {

std::string group_text(const BlockGroup& g) {
    return std::to_string(g.cluster_count) + "x" + std::to_string(g.cluster_size) + ":" +
           (g.mode == BlockMode::aligned ? "aligned" : "uniform_mixed");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_positive(std::string_view token, const std::string& context) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1)
        throw std::invalid_argument("invalid block spec " + context + ": expected positive integer, got '" +
                                    std::string(token) + "'");
    return value;
}

}  // namespace

BlockSpec parse_block_spec(std::string_view text) {
    BlockSpec spec;
    std::size_t start = 0;
    int group_number = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view token = trim(text.substr(start, end - start));
        ++group_number;
        const std::string context = "group " + std::to_string(group_number);
        if (token.empty())
            throw std::invalid_argument("invalid block spec " + context + ": empty group");
        const std::size_t x = token.find('x');
        const std::size_t colon = token.find(':');
        if (x == std::string_view::npos || colon == std::string_view::npos || colon < x)
            throw std::invalid_argument("invalid block spec " + context + ": expected <count>x<size>:<mode>, got '" +
                                        std::string(token) + "'");
        BlockGroup group;
        group.cluster_count = parse_positive(trim(token.substr(0, x)), context);
        group.cluster_size = parse_positive(trim(token.substr(x + 1, colon - x - 1)), context);
        const std::string_view mode = trim(token.substr(colon + 1));
        if (mode == "aligned")
            group.mode = BlockMode::aligned;
        else if (mode == "uniform_mixed")
            group.mode = BlockMode::uniform_mixed;
        else
            throw std::invalid_argument("invalid block spec " + context +
                                        ": mode must be aligned or uniform_mixed, got '" +
                                        std::string(mode) + "'");
        spec.groups.push_back(group);
        if (end == text.size()) break;
        start = end + 1;
    }
    if (spec.groups.empty()) throw std::invalid_argument("empty block spec");
    return spec;
}

std::string format_block_spec(const BlockSpec& spec) {
    std::string out;
    for (std::size_t g = 0; g < spec.groups.size(); ++g) {
        if (g > 0) out += ",";
        out += group_text(spec.groups[g]);
    }
    return out;
}

MatchingTable generate_block_pair(const BlockSpec& spec) {
    if (spec.groups.empty()) throw std::invalid_argument("empty block spec");
    std::int64_t clusters = 0;
    for (std::size_t g = 0; g < spec.groups.size(); ++g) {
        const BlockGroup& group = spec.groups[g];
        if (group.cluster_count < 1 || group.cluster_size < 1)
            throw std::invalid_argument("invalid block spec group " + std::to_string(g + 1) + " (" +
                                        group_text(group) + "): counts must be positive");
        if (group.mode == BlockMode::uniform_mixed && group.cluster_size % group.cluster_count != 0)
            throw std::invalid_argument(
                "invalid block spec group " + std::to_string(g + 1) + " (" + group_text(group) +
                "): cluster_size not divisible by cluster_count");
        clusters += group.cluster_count;
    }
    std::vector<std::vector<std::int64_t>> cells(
        clusters, std::vector<std::int64_t>(clusters, 0));
    std::int64_t offset = 0;
    for (const BlockGroup& group : spec.groups) {
        if (group.mode == BlockMode::aligned) {
            for (std::int64_t k = 0; k < group.cluster_count; ++k)
                cells[offset + k][offset + k] = group.cluster_size;
        } else {
            const std::int64_t share = group.cluster_size / group.cluster_count;
            for (std::int64_t i = 0; i < group.cluster_count; ++i)
                for (std::int64_t j = 0; j < group.cluster_count; ++j)
                    cells[offset + i][offset + j] = share;
        }
        offset += group.cluster_count;
    }
    return table_from_cells(cells);
}

MatchingTable toy_example(int id) {
    BlockSpec spec;
    switch (id) {
        case 1:
            spec.groups = {{2, 20, BlockMode::aligned}, {2, 8, BlockMode::uniform_mixed}};
            break;
        case 2:
            spec.groups = {{2, 20, BlockMode::uniform_mixed}, {2, 8, BlockMode::aligned}};
            break;
        case 3:
            spec.groups = {{4, 200, BlockMode::aligned}, {16, 16, BlockMode::uniform_mixed}};
            break;
        case 4:
            spec.groups = {{4, 200, BlockMode::uniform_mixed}, {16, 16, BlockMode::aligned}};
            break;
        default:
            throw std::invalid_argument("toy example id out of range (1..4)");
    }
    return generate_block_pair(spec);
}

MatchingTable ecoli_table() {
    return table_from_cells(
        {
            {5, 0, 137, 1},   // cp
            {8, 0, 1, 68},    // im
            {0, 1, 0, 1},     // imL
            {1, 0, 0, 1},     // imS
            {0, 0, 1, 34},    // imU
            {2, 18, 0, 0},    // om
            {0, 5, 0, 0},     // omL
            {46, 1, 4, 1},    // pp
        },
        {"cp", "im", "imL", "imS", "imU", "om", "omL", "pp"}, {"Z1", "Z2", "Z3", "Z4"});
}

std::pair<std::vector<std::string>, std::vector<std::string>> labels_from_table(
    const MatchingTable& m) {
    // Emit cells staircase-first so that rows and columns make their first
    // appearance in table order; rebuilding the pair then reproduces the
    // table instead of a row/column permutation of it.
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.cell(i, j) > 0) order.emplace_back(i, j);
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
        return std::tuple(std::max(x.first, x.second), x.second, x.first) <
               std::tuple(std::max(y.first, y.second), y.second, y.first);
    });
    std::vector<std::string> u, z;
    u.reserve(m.n);
    z.reserve(m.n);
    for (const auto& [i, j] : order)
        for (std::int64_t k = 0; k < m.cell(i, j); ++k) {
            u.push_back(m.row_labels[i]);
            z.push_back(m.col_labels[j]);
        }
    return {std::move(u), std::move(z)};
}

}  // namespace partcmp
