#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partcmp/core.hpp"

namespace partcmp {

enum class BlockMode {
    aligned,        // one-to-one: the group's clusters agree perfectly
    uniform_mixed,  // each cluster spread evenly over the group's counterparts
};

struct BlockGroup {
    std::int64_t cluster_count = 1;
    std::int64_t cluster_size = 1;
    BlockMode mode = BlockMode::aligned;
};

/// A block-structured pair of partitions: each group contributes
/// cluster_count clusters of cluster_size objects to both sides, either
/// perfectly aligned or uniformly mixed. uniform_mixed requires
/// cluster_size divisible by cluster_count.
struct BlockSpec {
    std::vector<BlockGroup> groups;
};

/// Parses the text form "<count>x<size>:<mode>[,<count>x<size>:<mode>...]"
/// with mode `aligned` or `uniform_mixed`. Throws std::invalid_argument
/// naming the offending group.
BlockSpec parse_block_spec(std::string_view text);

std::string format_block_spec(const BlockSpec& spec);

/// Deterministic table for a block spec: aligned groups contribute
/// diagonal blocks, uniform_mixed groups constant blocks of
/// cluster_size / cluster_count. Groups do not overlap across
/// rows/columns. Throws std::invalid_argument on a divisibility
/// violation, naming the group.
MatchingTable generate_block_pair(const BlockSpec& spec);

/// The four built-in example configurations:
///   1: 2x20 aligned + 2x8 uniform_mixed      (n = 56)
///   2: 2x20 uniform_mixed + 2x8 aligned      (n = 56)
///   3: 4x200 aligned + 16x16 uniform_mixed   (n = 1056)
///   4: 4x200 uniform_mixed + 16x16 aligned   (n = 1056)
MatchingTable toy_example(int id);

/// The embedded 8x4 E. coli protein-localization table: reference classes
/// (cp, im, imL, imS, imU, om, omL, pp) against a 4-cluster trial
/// partition (Z1..Z4), n = 336.
MatchingTable ecoli_table();

/// Expands a table back into a label pair (row-major object order) that
/// reproduces it through build_matching_table.
std::pair<std::vector<std::string>, std::vector<std::string>> labels_from_table(
    const MatchingTable& m);

}  // namespace partcmp
