#include <doctest.h>

#include <random>
#include <set>

#include "cyclohecke/partitions.hpp"

using namespace cyclohecke;

namespace {

// independent p(n) oracle: DP over largest part
long partition_count(int n) {
    std::vector<std::vector<long>> p(n + 1, std::vector<long>(n + 1, 0));
    for (int k = 0; k <= n; ++k) p[0][k] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
            p[m][k] = p[m][k - 1] + (m >= k ? p[m - k][k] : 0);
    return p[n][n];
}

}  // namespace

TEST_CASE("partition type invariants") {
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({0}));
    Partition lam({4, 2, 1});
    CHECK(lam.size() == 7);
    CHECK(lam.length() == 3);
    CHECK(lam.divided_floor(2).parts() == std::vector<int>{2, 1});
    CHECK(lam.padded(5) == std::vector<int>{4, 2, 1, 0, 0});
}

TEST_CASE("enumerate_partitions") {
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p3 = enumerate_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].parts() == std::vector<int>{3});
    CHECK(p3[1].parts() == std::vector<int>{2, 1});
    CHECK(p3[2].parts() == std::vector<int>{1, 1, 1});

    CHECK(enumerate_partitions(5).size() == 7);
    for (int n = 0; n <= 9; ++n)
        CHECK(static_cast<long>(enumerate_partitions(n).size()) == partition_count(n));
}

TEST_CASE("enumerate_multipartitions") {
    CHECK(enumerate_multipartitions(0, 3).size() == 1);
    auto m22 = enumerate_multipartitions(2, 2);
    REQUIRE(m22.size() == 5);
    CHECK(m22[0].component(1).parts() == std::vector<int>{2});
    CHECK(m22[0].component(2).empty());
    CHECK(m22[4].component(2).parts() == std::vector<int>{1, 1});
    CHECK(enumerate_multipartitions(3, 2).size() == 10);
    // |M_d(l)| = sum over compositions of products of partition counts
    long expect = 0;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b) expect += partition_count(a) * partition_count(b) * partition_count(4 - a - b);
    CHECK(static_cast<long>(enumerate_multipartitions(4, 3).size()) == expect);
}

TEST_CASE("enumerate_p_set") {
    auto p0 = enumerate_p_set(0, 2);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p22 = enumerate_p_set(2, 2);
    std::set<std::vector<int>> got;
    for (const auto& p : p22) got.insert(p.parts());
    std::set<std::vector<int>> expect{{}, {1}, {2}, {3}, {1, 1}};
    CHECK(got == expect);

    for (int d = 0; d <= 5; ++d)
        for (int l = 1; l <= 3; ++l)
            CHECK(enumerate_p_set(d, l).size() == enumerate_multipartitions(d, l).size());
}

TEST_CASE("phi and its inverse") {
    Multipartition mp({Partition({2}), Partition({1})});
    CHECK(phi(mp, 2).parts() == std::vector<int>{2, 1});
    CHECK(phi(Multipartition({Partition(), Partition()}), 2).empty());

    for (int d = 0; d <= 5; ++d)
        for (int l = 1; l <= 3; ++l) {
            std::set<std::vector<int>> images;
            for (const auto& bp : enumerate_multipartitions(d, l)) {
                Partition mu = phi(bp, l);
                CHECK(in_p_set(mu, d, l));
                CHECK(images.insert(mu.parts()).second);  // injective
                CHECK(phi_inv(mu, l, d) == bp);
            }
        }
    CHECK_THROWS(phi_inv(Partition({2, 1}), 2, 2));  // outside P_2(2)
}

TEST_CASE("residue_tuple") {
    Multipartition single({Partition({4, 2, 1})});
    ResidueMultiset expected({Rat(5), Rat(6), Rat(7), Rat(8), Rat(4), Rat(5), Rat(3)});
    CHECK(residue_tuple(single, {Rat(5)}) == expected);

    CHECK(residue_tuple(Multipartition({Partition({1})}), {Rat(0)}) ==
          ResidueMultiset({Rat(0)}));
    CHECK(residue_tuple(Multipartition({Partition({1}), Partition({1})}), {Rat(0), Rat(0)}) ==
          ResidueMultiset({Rat(0), Rat(0)}));
    // multiset semantics: entry order of construction is irrelevant
    CHECK(ResidueMultiset({Rat(1), Rat(0)}) == ResidueMultiset({Rat(0), Rat(1)}));
}

TEST_CASE("basd_rank") {
    CHECK(basd_rank(0, 1) == 1);
    CHECK(basd_rank(1, 3) == 3);
    CHECK(basd_rank(2, 2) == 6);
    // the rational total must always collapse to an integer
    for (int d = 0; d <= 5; ++d)
        for (int l = 1; l <= 3; ++l) CHECK(basd_rank(d, l) > 0);
    // at l = 1 the centralizer is the whole group algebra
    CHECK(basd_rank(4, 1) == 24);
    CHECK(basd_rank(5, 1) == 120);
}

TEST_CASE("elementary symmetric shift identity") {
    CHECK(elementary_symmetric_shift_identity({}, Rat(0), 0));
    CHECK(elementary_symmetric_shift_identity({}, Rat(5), 1));
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9), klen(0, 4), rdist(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rat> u_list;
        int k = klen(rng);
        for (int t = 0; t < k; ++t) u_list.push_back(rat(num(rng), den(rng)));
        CHECK(elementary_symmetric_shift_identity(u_list, rat(num(rng), den(rng)), rdist(rng)));
    }
}

TEST_CASE("distinct_rearrangements") {
    CHECK(distinct_rearrangements({0, 0, 0}).size() == 1);
    CHECK(distinct_rearrangements({1, 0}).size() == 2);
    CHECK(distinct_rearrangements({2, 1, 0}).size() == 6);
    CHECK(distinct_rearrangements({1, 1, 0}).size() == 3);
}
