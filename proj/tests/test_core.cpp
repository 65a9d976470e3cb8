#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "partcmp/core.hpp"
#include "partcmp/synth.hpp"
#include "test_util.hpp"

using namespace partcmp;
using testutil::counts_equal;
using testutil::part;
using testutil::Rng;

TEST_CASE("partition_from_labels basics") {
    const Partition p = part({"x", "x", "y"});
    CHECK(p.n() == 3);
    CHECK(p.cluster_ids == std::vector<std::string>{"x", "y"});
    CHECK(p.sizes == std::vector<std::int64_t>{2, 1});

    const Partition single = part({"a"});
    CHECK(single.n() == 1);
    CHECK(single.cluster_count() == 1);
    CHECK(single.sizes.front() == 1);

    CHECK_THROWS_WITH_AS(part({}), "empty partition", std::invalid_argument);
}

TEST_CASE("partition_from_labels keeps first-appearance order") {
    const Partition p = part({"b", "a", "b", "c", "a"});
    CHECK(p.cluster_ids == std::vector<std::string>{"b", "a", "c"});
    CHECK(p.sizes == std::vector<std::int64_t>{2, 2, 1});
}

TEST_CASE("reference labels of the embedded protein table") {
    auto [u_labels, z_labels] = labels_from_table(ecoli_table());
    const Partition reference = part(u_labels);
    CHECK(reference.n() == 336);
    CHECK(reference.cluster_count() == 8);
    CHECK(reference.cluster_ids ==
          std::vector<std::string>{"cp", "im", "imL", "imS", "imU", "om", "omL", "pp"});
    CHECK(reference.sizes == std::vector<std::int64_t>{143, 77, 2, 2, 35, 20, 5, 52});
}

TEST_CASE("build_matching_table identical partitions") {
    const MatchingTable m = build_matching_table(part({"x", "x", "y", "y"}), part({"x", "x", "y", "y"}));
    CHECK(m.rows == 2);
    CHECK(m.cols == 2);
    CHECK(m.cell(0, 0) == 2);
    CHECK(m.cell(0, 1) == 0);
    CHECK(m.cell(1, 0) == 0);
    CHECK(m.cell(1, 1) == 2);
}

TEST_CASE("build_matching_table reproduces the embedded table from labels") {
    const MatchingTable expected = ecoli_table();
    auto [u_labels, z_labels] = labels_from_table(expected);
    const MatchingTable m = build_matching_table(part(u_labels), part(z_labels));
    CHECK(m.rows == expected.rows);
    CHECK(m.cols == expected.cols);
    CHECK(m.cells == expected.cells);
    CHECK(m.row_totals == expected.row_totals);
    CHECK(m.col_totals == expected.col_totals);

    CHECK_THROWS_WITH_AS(build_matching_table(part({"a"}), part({"b", "b"})),
                         "partition length mismatch", std::invalid_argument);
}

TEST_CASE("build_matching_table random cells match a direct recount") {
    Rng rng(7);
    const auto u_labels = testutil::random_labels(rng, 30, 5);
    const auto z_labels = testutil::random_labels(rng, 30, 5);
    const Partition u = part(u_labels);
    const Partition z = part(z_labels);
    const MatchingTable m = build_matching_table(u, z);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            std::int64_t count = 0;
            for (std::size_t k = 0; k < u_labels.size(); ++k)
                if (u_labels[k] == m.row_labels[i] && z_labels[k] == m.col_labels[j]) ++count;
            CHECK(m.cell(i, j) == count);
        }
    }
}

TEST_CASE("pair_counts on the embedded table") {
    const PairCounts pc = pair_counts(ecoli_table());
    CHECK(pc.N == 56280);
    CHECK(pc.T == 13398);
    CHECK(pc.P == 15202);
    CHECK(pc.Q == 17909);
    CHECK(pc.a + pc.b + pc.c + pc.d == pc.N);
    // joined shares round to .27 and .32
    CHECK(testutil::near(ratio(pc.P, pc.N), 0.27, 0.005));
    CHECK(testutil::near(ratio(pc.Q, pc.N), 0.32, 0.005));
}

TEST_CASE("pair_counts identity case") {
    const PairCounts pc = testutil::counts_of({"x", "x", "y", "y"}, {"x", "x", "y", "y"});
    CHECK(pc.N == 6);
    CHECK(pc.T == 2);
    CHECK(pc.P == 2);
    CHECK(pc.Q == 2);
    CHECK(pc.a == 2);
    CHECK(pc.b == 0);
    CHECK(pc.c == 0);
    CHECK(pc.d == 4);
}

TEST_CASE("pair_counts separated shares of the first block example") {
    const PairCounts pc = pair_counts(toy_example(1));
    CHECK(testutil::near(ratio(pc.d, pc.c + pc.d), 0.97, 0.005));
    CHECK(testutil::near(ratio(pc.d, pc.b + pc.d), 0.97, 0.005));
}

TEST_CASE("pair_counts handles n = 1") {
    const PairCounts pc = testutil::counts_of({"a"}, {"b"});
    CHECK(pc.N == 0);
    CHECK(pc.T == 0);
    CHECK(pc.P == 0);
    CHECK(pc.Q == 0);
    CHECK(pc.d == 0);
}

TEST_CASE("oracle_pair_counts hand-enumerable cases") {
    PairCounts pc = oracle_pair_counts(part({"x", "x", "y", "y"}), part({"p", "q", "p", "q"}));
    CHECK(pc.a == 0);
    CHECK(pc.b == 2);
    CHECK(pc.c == 2);
    CHECK(pc.d == 2);

    pc = oracle_pair_counts(part({"x", "x", "x"}), part({"p", "p", "p"}));
    CHECK(pc.a == 3);
    CHECK(pc.b == 0);
    CHECK(pc.c == 0);
    CHECK(pc.d == 0);
}

TEST_CASE("fast pair counts equal the oracle on random partitions") {
    for (const auto& [u_labels, z_labels] : testutil::instance_suite(100)) {
        const Partition u = part(u_labels);
        const Partition z = part(z_labels);
        const PairCounts fast = pair_counts(build_matching_table(u, z));
        const PairCounts slow = oracle_pair_counts(u, z);
        REQUIRE(counts_equal(fast, slow));
        REQUIRE(fast.a + fast.b + fast.c + fast.d == fast.N);
        REQUIRE(fast.a >= 0);
        REQUIRE(fast.b >= 0);
        REQUIRE(fast.c >= 0);
        REQUIRE(fast.d >= 0);
        REQUIRE(fast.T <= std::min(fast.P, fast.Q));
        REQUIRE(fast.P <= fast.N);
        REQUIRE(fast.Q <= fast.N);
    }
}

TEST_CASE("transposing swaps P and Q, b and c") {
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const std::int64_t n = 2 + rng.below(60);
        const MatchingTable m = build_matching_table(part(testutil::random_labels(rng, n, 6)),
                                                     part(testutil::random_labels(rng, n, 6)));
        const PairCounts pc = pair_counts(m);
        const PairCounts tc = pair_counts(transpose(m));
        CHECK(tc.N == pc.N);
        CHECK(tc.T == pc.T);
        CHECK(tc.a == pc.a);
        CHECK(tc.d == pc.d);
        CHECK(tc.P == pc.Q);
        CHECK(tc.Q == pc.P);
        CHECK(tc.b == pc.c);
        CHECK(tc.c == pc.b);
    }
}

TEST_CASE("permuting rows or columns leaves pair counts unchanged") {
    Rng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        const std::int64_t n = 2 + rng.below(60);
        const MatchingTable m = build_matching_table(part(testutil::random_labels(rng, n, 6)),
                                                     part(testutil::random_labels(rng, n, 6)));
        std::vector<std::size_t> perm(m.rows);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng.gen);
        CHECK(counts_equal(pair_counts(m), pair_counts(testutil::permute_rows(m, perm))));

        std::vector<std::size_t> col_perm(m.cols);
        std::iota(col_perm.begin(), col_perm.end(), 0);
        std::shuffle(col_perm.begin(), col_perm.end(), rng.gen);
        const MatchingTable permuted =
            transpose(testutil::permute_rows(transpose(m), col_perm));
        CHECK(counts_equal(pair_counts(m), pair_counts(permuted)));
    }
}

TEST_CASE("cluster_weights of the first block example") {
    const ClusterWeights cw = cluster_weights(toy_example(1));
    REQUIRE(cw.row_rel_defined);
    CHECK(testutil::near(cw.row_rel[0], 0.44, 0.005));
    CHECK(testutil::near(cw.row_rel[1], 0.44, 0.005));
    CHECK(testutil::near(cw.row_rel[2], 0.06, 0.005));
    CHECK(testutil::near(cw.row_rel[3], 0.06, 0.005));
    CHECK(cw.col_rel == cw.row_rel);
}

TEST_CASE("cluster_weights of the embedded table") {
    const ClusterWeights cw = cluster_weights(ecoli_table());
    CHECK(testutil::near(cw.row_rel[0], 0.67, 0.005));
    CHECK(testutil::near(cw.row_rel[1], 0.19, 0.005));
    CHECK(testutil::near(cw.col_rel[2], 0.57, 0.005));
}

TEST_CASE("cluster_weights on an all-singleton partition") {
    const MatchingTable m =
        build_matching_table(part({"a", "b", "c"}), part({"p", "p", "p"}));
    const ClusterWeights cw = cluster_weights(m);
    CHECK(cw.P == 0);
    CHECK_FALSE(cw.row_rel_defined);
    CHECK(cw.col_rel_defined);
    for (std::int64_t pairs : cw.row_pairs) CHECK(pairs == 0);
}

TEST_CASE("cluster weights sum exactly to the totals") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const std::int64_t n = 1 + rng.below(120);
        const MatchingTable m = build_matching_table(part(testutil::random_labels(rng, n, 9)),
                                                     part(testutil::random_labels(rng, n, 9)));
        const PairCounts pc = pair_counts(m);
        const ClusterWeights cw = cluster_weights(m);
        CHECK(std::accumulate(cw.row_pairs.begin(), cw.row_pairs.end(), std::int64_t{0}) == pc.P);
        CHECK(std::accumulate(cw.col_pairs.begin(), cw.col_pairs.end(), std::int64_t{0}) == pc.Q);
        if (cw.row_rel_defined) {
            const double total = std::accumulate(cw.row_rel.begin(), cw.row_rel.end(), 0.0);
            CHECK(testutil::near(total, 1.0, 1e-12));
        }
        if (cw.col_rel_defined) {
            const double total = std::accumulate(cw.col_rel.begin(), cw.col_rel.end(), 0.0);
            CHECK(testutil::near(total, 1.0, 1e-12));
        }
    }
}

TEST_CASE("table_from_cells validation") {
    CHECK_THROWS_AS(table_from_cells({}), std::invalid_argument);
    CHECK_THROWS_AS(table_from_cells({{1, 2}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(table_from_cells({{1, -2}}), std::invalid_argument);
    const MatchingTable m = table_from_cells({{1, 2}, {3, 4}});
    CHECK(m.row_labels == std::vector<std::string>{"U1", "U2"});
    CHECK(m.col_labels == std::vector<std::string>{"Z1", "Z2"});
    CHECK(m.row_totals == std::vector<std::int64_t>{3, 7});
    CHECK(m.col_totals == std::vector<std::int64_t>{4, 6});
    CHECK(m.n == 10);
}
