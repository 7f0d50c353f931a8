#include <doctest.h>

#include "nilcone/partition.hpp"
#include "oracles.hpp"

using namespace nilcone;

TEST_CASE("partition validation and accessors") {
    Partition p({3, 2, 2});
    CHECK(p.weight() == 7);
    CHECK(p.length() == 3);
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.multiplicity(5) == 0);
    CHECK(p.str() == "(3,2,2)");
    CHECK(Partition().str() == "()");
    CHECK_THROWS_AS(Partition({2, 3}), InvalidPartition);
    CHECK_THROWS_AS(Partition({1, 0}), InvalidPartition);
    CHECK_THROWS_AS(Partition({-1}), InvalidPartition);
}

TEST_CASE("conjugate is an involution and swaps (d) with (1^d)") {
    CHECK(Partition({4}).conjugate() == Partition({1, 1, 1, 1}));
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    for (int d = 0; d <= 8; ++d)
        for (const auto& p : partitions_of(d))
            CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("canonical order of partitions_of") {
    auto ps = partitions_of(3);
    REQUIRE(ps.size() == 3);
    CHECK(ps[0] == Partition({1, 1, 1}));
    CHECK(ps[1] == Partition({2, 1}));
    CHECK(ps[2] == Partition({3}));
    // ascending lex refines dominance: nu dominated by lambda => nu earlier
    for (int d = 1; d <= 8; ++d) {
        auto all = partitions_of(d);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j)
                if (dominance_leq(all[i], all[j]))
                    CHECK(i <= j);
    }
}

TEST_CASE("dominance order basics") {
    CHECK(dominance_leq(Partition({1, 1, 1}), Partition({3})));
    CHECK(dominance_leq(Partition({2, 1}), Partition({2, 1})));
    CHECK_FALSE(dominance_leq(Partition({3}), Partition({2, 1})));
    // (3,1,1,1) and (2,2,2) are incomparable
    CHECK_FALSE(dominance_leq(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
    CHECK_FALSE(dominance_leq(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
    CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({3})), WeightMismatch);
}

TEST_CASE("partition counts match the naive recurrence") {
    for (int d = 0; d <= 12; ++d)
        CHECK(partition_count(d) == oracle::partition_count_naive(d));
    CHECK(partition_count(5) == 7);
    CHECK(partition_count(10) == 42);
}
