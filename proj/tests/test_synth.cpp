#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "partcmp/adjusted.hpp"
#include "partcmp/randlike.hpp"
#include "partcmp/synth.hpp"
#include "partcmp/wallace.hpp"
#include "test_util.hpp"

using namespace partcmp;
using testutil::near;

TEST_CASE("generate_block_pair block layout") {
    BlockSpec spec;
    spec.groups = {{2, 20, BlockMode::aligned}, {2, 8, BlockMode::uniform_mixed}};
    const MatchingTable m = generate_block_pair(spec);
    REQUIRE(m.rows == 4);
    REQUIRE(m.cols == 4);
    CHECK(m.cell(0, 0) == 20);
    CHECK(m.cell(1, 1) == 20);
    CHECK(m.cell(0, 1) == 0);
    for (std::size_t i = 2; i < 4; ++i)
        for (std::size_t j = 2; j < 4; ++j) CHECK(m.cell(i, j) == 4);
    CHECK(m.cell(2, 0) == 0);
    CHECK(m.n == 56);

    const PairCounts pc = pair_counts(m);
    CHECK(near(*wallace_w(pc).value, 0.93, 0.005));
    CHECK(near(*rand_index(pc).value, 0.96, 0.005));
    CHECK(near(*adjusted_rand(pc).value, 0.90, 0.005));
}

TEST_CASE("generate_block_pair divisibility error names the group") {
    BlockSpec spec;
    spec.groups = {{2, 20, BlockMode::aligned}, {3, 10, BlockMode::uniform_mixed}};
    CHECK_THROWS_WITH_AS(generate_block_pair(spec),
                         "invalid block spec group 2 (3x10:uniform_mixed): cluster_size not "
                         "divisible by cluster_count",
                         std::invalid_argument);
}

TEST_CASE("block spec text form round-trips") {
    const BlockSpec spec = parse_block_spec("2x20:aligned, 2x8:uniform_mixed");
    REQUIRE(spec.groups.size() == 2);
    CHECK(spec.groups[0].cluster_count == 2);
    CHECK(spec.groups[0].cluster_size == 20);
    CHECK(spec.groups[0].mode == BlockMode::aligned);
    CHECK(spec.groups[1].mode == BlockMode::uniform_mixed);
    CHECK(format_block_spec(spec) == "2x20:aligned,2x8:uniform_mixed");

    CHECK_THROWS_AS(parse_block_spec("2x20"), std::invalid_argument);
    CHECK_THROWS_AS(parse_block_spec("2x20:diagonal"), std::invalid_argument);
    CHECK_THROWS_AS(parse_block_spec("0x20:aligned"), std::invalid_argument);
    CHECK_THROWS_AS(parse_block_spec(""), std::invalid_argument);
}

TEST_CASE("toy_example wiring") {
    CHECK_THROWS_AS(toy_example(0), std::invalid_argument);
    CHECK_THROWS_AS(toy_example(5), std::invalid_argument);

    const MatchingTable toy3 = toy_example(3);
    CHECK(toy3.rows == 20);
    CHECK(toy3.n == 1056);
    // the mixed small clusters spread one object into each counterpart
    CHECK(toy3.cell(4, 4) == 1);
    CHECK(toy3.cell(19, 5) == 1);
    const std::vector<ClusterStat> toy3_rows = per_cluster_w(toy3);
    CHECK(*toy3_rows[4].value.value == 0.0);

    const MatchingTable toy4 = toy_example(4);
    CHECK(toy4.cell(0, 0) == 50);
    CHECK(*per_cluster_w(toy4)[0].value.value == 4900.0 / 19900.0);

    CHECK(*per_cluster_w(toy_example(1))[2].value.value == 12.0 / 28.0);
    CHECK(*per_cluster_w(toy_example(2))[0].value.value == 90.0 / 190.0);
}

TEST_CASE("generated tables satisfy the table invariants") {
    for (int id = 1; id <= 4; ++id) {
        const MatchingTable m = toy_example(id);
        CHECK(std::accumulate(m.row_totals.begin(), m.row_totals.end(), std::int64_t{0}) == m.n);
        CHECK(std::accumulate(m.col_totals.begin(), m.col_totals.end(), std::int64_t{0}) == m.n);
        std::int64_t total = 0;
        for (std::int64_t cell : m.cells) {
            CHECK(cell >= 0);
            total += cell;
        }
        CHECK(total == m.n);
    }
}

TEST_CASE("aligned-only specs give perfect agreement everywhere") {
    BlockSpec spec;
    spec.groups = {{3, 5, BlockMode::aligned}, {2, 7, BlockMode::aligned}};
    const MatchingTable m = generate_block_pair(spec);
    const PairCounts pc = pair_counts(m);
    for (const auto& [name, value] : wallace_family_indices(pc)) {
        CAPTURE(name);
        if (value.defined() && name != "johnson") CHECK(*value.value == 1.0);
    }
    for (const auto& [name, value] : rand_family_indices(pc)) {
        CAPTURE(name);
        if (value.defined()) CHECK(*value.value == 1.0);
    }
    for (const auto& [name, value] : adjusted_family_indices(pc)) {
        CAPTURE(name);
        if (value.defined()) CHECK(*value.value == 1.0);
    }
}

TEST_CASE("the embedded table matches its published cells") {
    const MatchingTable m = ecoli_table();
    REQUIRE(m.rows == 8);
    REQUIRE(m.cols == 4);
    CHECK(m.n == 336);
    CHECK(m.cell(0, 2) == 137);  // cp in Z3
    CHECK(m.cell(7, 0) == 46);   // pp in Z1
    CHECK(m.col_totals == std::vector<std::int64_t>{62, 25, 143, 106});
    CHECK(std::accumulate(m.row_totals.begin(), m.row_totals.end(), std::int64_t{0}) == 336);
    CHECK(m.row_labels ==
          std::vector<std::string>{"cp", "im", "imL", "imS", "imU", "om", "omL", "pp"});
    CHECK(m.col_labels == std::vector<std::string>{"Z1", "Z2", "Z3", "Z4"});
}

TEST_CASE("labels_from_table round-trips the embedded table") {
    const MatchingTable m = ecoli_table();
    auto [u_labels, z_labels] = labels_from_table(m);
    REQUIRE(u_labels.size() == 336);
    const MatchingTable rebuilt = build_matching_table(partition_from_labels(u_labels),
                                                       partition_from_labels(z_labels));
    CHECK(rebuilt.cells == m.cells);
    CHECK(rebuilt.row_labels == m.row_labels);
    CHECK(rebuilt.col_labels == m.col_labels);
}
