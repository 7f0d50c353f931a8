#include <doctest.h>

#include "nilcone/ccmap.hpp"
#include "nilcone/kostka.hpp"

using namespace nilcone;

TEST_CASE("cc_block small examples") {
    CCBlock trivial = cc_block(HNType({{1, 1}, {1, 0}}));
    REQUIRE(trivial.matrix.size() == 1);
    CHECK(trivial.matrix.at(0, 0) == 1);
    CHECK(trivial.labels ==
          std::vector<MultiPartition>{{Partition({1}), Partition({1})}});

    CCBlock ss = cc_block(HNType({{2, 2}}));
    CHECK(ss.matrix.labels() == std::vector<std::string>{"((1,1))", "((2))"});
    CHECK(ss.matrix.rows() == std::vector<std::vector<Int>>{{1, 0}, {1, 1}});

    CCBlock kron = cc_block(HNType({{0, 2}, {2, 0}}));
    REQUIRE(kron.matrix.size() == 4);
    // row ((2),(2)) is last, col ((1,1),(1,1)) is first
    CHECK(kron.matrix.at(3, 0) == 1);
    CHECK(kron.matrix.rows() ==
          std::vector<std::vector<Int>>{
              {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 1}});
}

TEST_CASE("cc_block equals the entrywise Kostka product; unitriangular") {
    for (long long r = 0; r <= 3; ++r)
        for (long long d = -4; d <= 4; ++d) {
            if (r == 0 && d <= 0)
                continue;
            for (const auto& h : enumerate_hn({r, d}, 4)) {
                CCBlock b = cc_block(h);
                CHECK(b.matrix.is_lower_unitriangular());
                if (b.matrix.size() > 64)
                    continue;
                for (std::size_t i = 0; i < b.matrix.size(); ++i)
                    for (std::size_t j = 0; j < b.matrix.size(); ++j) {
                        Int prod = 1;
                        for (std::size_t f = 0; f < h.length(); ++f)
                            prod *= kostka(b.labels[i][f], b.labels[j][f]);
                        CHECK(b.matrix.at(i, j) == prod);
                    }
            }
        }
}

TEST_CASE("Kronecker association order does not matter") {
    // ((0,2),(2,2),(2,0)) has factor gcds 2,2,2
    CCBlock b = cc_block(HNType({{0, 2}, {2, 2}, {2, 0}}));
    auto k2 = kostka_matrix(2).rows();
    CHECK(b.matrix.rows() == kronecker_entries(kronecker_entries(k2, k2), k2));
    CHECK(b.matrix.rows() == kronecker_entries(k2, kronecker_entries(k2, k2)));
}

TEST_CASE("cc_truncated layout and unknown mask") {
    TruncatedCCMatrix t3 = cc_truncated({0, 3}, 5);
    CHECK(t3.size() == 3);
    CHECK_FALSE(t3.has_unknowns());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(t3.entry(i, j) == kostka_matrix(3).at(i, j));

    CHECK_FALSE(cc_truncated({2, 2}, 0).has_unknowns());

    TruncatedCCMatrix t = cc_truncated({2, 2}, 2);
    REQUIRE(t.size() == 4);
    REQUIRE(t.blocks().size() == 3);
    CHECK(t.has_unknowns());
    using K = TruncatedCCMatrix::Kind;
    // diagonal blocks known
    CHECK(t.kind(0, 1) == K::Known);
    CHECK(t.entry(1, 0) == 1);
    // upper cross-stratum entries are known zeros
    CHECK(t.kind(0, 2) == K::Known);
    CHECK(t.entry(0, 2) == 0);
    CHECK(t.kind(1, 3) == K::Known);
    // lower cross-stratum entries are unknown, never zero-filled
    CHECK(t.kind(2, 0) == K::Unknown);
    CHECK(t.kind(3, 1) == K::Unknown);
    // the two codim-2 strata are incomparable: known zeros both ways
    CHECK(t.kind(3, 2) == K::Known);
    CHECK(t.entry(3, 2) == 0);
    CHECK(t.kind(2, 3) == K::Known);
    CHECK(t.entry(2, 3) == 0);
    CHECK_THROWS_AS(t.entry(2, 0), UnknownEntries);
}

TEST_CASE("invert_known_part") {
    TruncatedCCMatrix ss = cc_truncated({2, 2}, 0);
    IntegerMatrix inv = invert_known_part(ss);
    CHECK(inv.rows() == std::vector<std::vector<Int>>{{1, 0}, {-1, 1}});

    // (A kron A)^{-1} = A^{-1} kron A^{-1}
    CCBlock kron = cc_block(HNType({{0, 2}, {2, 0}}));
    IntegerMatrix kinv = invert_unitriangular(kron.matrix);
    auto a_inv = invert_unitriangular(kostka_matrix(2)).rows();
    CHECK(kinv.rows() == kronecker_entries(a_inv, a_inv));
    CHECK(kron.matrix.multiply(kinv).is_identity());

    TruncatedCCMatrix t = cc_truncated({2, 2}, 2);
    CHECK_THROWS_AS(invert_known_part(t), UnknownEntries);
    IntegerMatrix blockInv = invert_known_part(t, true);
    // known part times blockwise inverse is the identity
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) {
            Int acc = 0;
            for (std::size_t k = 0; k < t.size(); ++k)
                if (t.kind(i, k) == TruncatedCCMatrix::Kind::Known)
                    acc += t.entry(i, k) * blockInv.at(k, j);
            CHECK(acc == (i == j ? 1 : 0));
        }
}
