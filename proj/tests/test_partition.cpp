#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "spinten/partition.hpp"

using namespace spinten;

namespace {

Partition P(std::vector<int> xs) { return Partition(std::move(xs)); }

}  // namespace

TEST_CASE("constructor validates shape") {
    CHECK_THROWS_AS(P({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(P({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(P({-1}), std::invalid_argument);
    CHECK(P({}).n() == 0);
    CHECK(P({4, 2, 1}).n() == 7);
    CHECK(P({4, 2, 1}).h() == 3);
    CHECK(P({4, 2, 1}).part(2) == 2);
    CHECK(P({4, 2, 1}).part(5) == 0);
    CHECK(P({4, 2, 2, 1}).h2() == 3);
    CHECK(Partition::from_multiset({1, 5, 0, 3}) == P({5, 3, 1}));
}

TEST_CASE("family predicates") {
    CHECK(P({5, 3, 1}).has_odd_distinct_parts());
    CHECK_FALSE(P({3, 3, 1}).has_odd_distinct_parts());
    CHECK(P({3, 3, 1}).has_only_odd_parts());
    CHECK_FALSE(P({4, 1}).has_only_odd_parts());
    CHECK(P({4, 1}).is_two_regular());
    CHECK_FALSE(P({2, 2}).is_two_regular());
}

TEST_CASE("enumeration counts match classical tables") {
    // p(n) for n = 0..12.
    const int pn[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    // q(n) = partitions into distinct parts, n = 0..12.
    const int qn[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15};
    for (int n = 0; n <= 12; ++n) {
        CHECK(enumerate(Family::All, n).size() == size_t(pn[n]));
        CHECK(enumerate(Family::TwoRegular, n).size() == size_t(qn[n]));
        // Euler: partitions into odd parts are equinumerous with distinct.
        CHECK(enumerate(Family::OddParts, n).size() == size_t(qn[n]));
    }
    // Distinct odd parts = self-conjugate partitions, n = 0..12.
    const int sc[] = {1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3};
    for (int n = 0; n <= 12; ++n)
        CHECK(enumerate(Family::OddDistinct, n).size() == size_t(sc[n]));
}

TEST_CASE("enumeration order and membership") {
    for (Family fam : {Family::All, Family::TwoRegular, Family::OddParts,
                       Family::OddDistinct, Family::BensonSplit}) {
        for (int n : {6, 9}) {
            auto v = enumerate(fam, n);
            std::set<Partition> seen;
            for (size_t i = 0; i < v.size(); ++i) {
                CHECK(v[i].n() == n);
                CHECK(seen.insert(v[i]).second);  // duplicate-free
                if (i > 0) CHECK(v[i].parts() < v[i - 1].parts());  // desc lex
            }
        }
    }
    auto v5 = enumerate(Family::TwoRegular, 5);
    REQUIRE(v5.size() == 3);
    CHECK(v5[0] == P({5}));
    CHECK(v5[1] == P({4, 1}));
    CHECK(v5[2] == P({3, 2}));
}

TEST_CASE("splitting criterion on consecutive part pairs") {
    CHECK(benson_split(P({3, 2})));       // 3-2=1, 3+2=5
    CHECK(benson_split(P({2, 1})));       // 2+1=3
    CHECK_FALSE(benson_split(P({4, 1}))); // 4-1=3 > 2
    CHECK(benson_split(P({3, 1})));       // 3-1=2, 3+1=4 != 2 mod 4
    CHECK_FALSE(benson_split(P({5})));    // 5-0=5 > 2
    CHECK(benson_split(P({1})));
    CHECK_THROWS_AS(benson_split(P({2, 2})), not_two_regular);
    // Cross-check the enumeration filter at n = 8.
    auto b8 = enumerate(Family::BensonSplit, 8);
    for (auto& lam : b8) CHECK(benson_split(lam));
    for (auto& lam : enumerate(Family::TwoRegular, 8))
        if (!benson_split(lam))
            CHECK(std::find(b8.begin(), b8.end(), lam) == b8.end());
}

TEST_CASE("doubling maps") {
    CHECK(dbl_seq(P({5})) == std::vector<int>({3, 2}));
    CHECK(dbl_seq(P({6})) == std::vector<int>({4, 2}));
    CHECK(dbl_seq(P({1})) == std::vector<int>({1}));
    CHECK(dblb_seq(P({5})) == std::vector<int>({3, 2}));
    CHECK(dblb_seq(P({6})) == std::vector<int>({3, 3}));
    CHECK(dblb_seq(P({5, 3, 1})) == std::vector<int>({3, 2, 2, 1, 1}));
    // dbl of an odd-distinct partition is a partition of the same n.
    for (int n = 1; n <= 12; ++n)
        for (auto& lam : enumerate(Family::OddDistinct, n)) {
            auto d = try_partition(dbl_seq(lam));
            REQUIRE(d.has_value());
            CHECK(d->n() == n);
        }
    CHECK_THROWS_AS(to_partition(std::vector<int>{1, 2}), std::invalid_argument);
}

TEST_CASE("basic spin labels") {
    CHECK(beta_n(1) == P({1}));
    CHECK(beta_n(2) == P({2}));
    CHECK(beta_n(3) == P({2, 1}));
    CHECK(beta_n(4) == P({3, 1}));
    CHECK(beta_n(5) == P({3, 2}));
    CHECK(beta_n(6) == P({4, 2}));
    CHECK(beta_n(7) == P({4, 3}));
    CHECK(beta_n(8) == P({5, 3}));
    CHECK(beta_n(9) == P({5, 4}));
    CHECK_THROWS_AS(beta_n(0), std::invalid_argument);
}

TEST_CASE("regularization") {
    CHECK(regularize(P({2, 1})) == P({2, 1}));
    CHECK(regularize(P({2, 2})) == P({3, 1}));
    // Ladder 3 holds the nodes (1,2) and (2,1); all three nodes of (1,1,1)
    // sit in ladders 2 and 3 whose top positions lie in row one.
    CHECK(regularize(P({1, 1, 1})) == P({3}));
    CHECK(regularize(P({2, 2, 2})) == P({4, 2}));
    CHECK(regularize(P({3, 3})) == P({4, 2}));
    CHECK(regularize(P({1, 1})) == P({2}));
    for (int n = 1; n <= 10; ++n)
        for (auto& mu : enumerate(Family::All, n)) {
            Partition r = regularize(mu);
            CHECK(r.n() == n);
            CHECK(r.is_two_regular());
            if (mu.is_two_regular()) CHECK(r == mu);  // identity on 2-regular
            CHECK(regularize(r) == r);                 // idempotent
            CHECK(dominates(r, mu));                   // moves nodes upward
        }
}

TEST_CASE("doubling compatibility with regularization") {
    // dblb(mu^R) = dbl(mu) whenever dbl(mu) is itself a partition with
    // distinct parts (it can fail to be one otherwise).
    for (int n = 1; n <= 12; ++n)
        for (auto& mu : enumerate(Family::OddDistinct, n)) {
            auto d = try_partition(dbl_seq(mu));
            REQUIRE(d.has_value());
            if (!d->is_two_regular()) continue;
            auto db = try_partition(dblb_seq(mu));
            if (db) CHECK(regularize(*db) == *d);
        }
    CHECK(beta_n(7) == regularize(to_partition(dblb_seq(P({7})))));
}

TEST_CASE("2-core") {
    CHECK(two_core(P({1})) == P({1}));
    CHECK(two_core(P({2})) == P({}));
    CHECK(two_core(P({2, 1})) == P({2, 1}));
    CHECK(two_core(P({3, 1})) == P({}));
    CHECK(two_core(P({4, 2, 1})) == P({1}));
    for (int n = 0; n <= 10; ++n)
        for (auto& mu : enumerate(Family::All, n)) {
            Partition c = two_core(mu);
            // A 2-core is a staircase (k, k-1, ..., 1).
            for (int j = 1; j <= c.h(); ++j) CHECK(c.part(j) == c.h() - j + 1);
            CHECK((n - c.n()) % 2 == 0);
            // Regularization preserves the 2-core.
            CHECK(two_core(regularize(mu)) == c);
        }
}

TEST_CASE("residue content") {
    auto c = content(P({3, 2}), 2);
    REQUIRE(c.size() == 2);
    CHECK(c[0] + c[1] == 5);
    CHECK(c[0] == 3);  // (1,1),(1,3),(2,2)
    CHECK(c[1] == 2);  // (1,2),(2,1)
    auto c3 = content(P({3, 2}), 3);
    CHECK(c3[0] == 2);  // (1,1),(2,2)
    CHECK(c3[1] == 1);  // (1,2)
    CHECK(c3[2] == 2);  // (1,3),(2,1)
    CHECK_THROWS_AS(content(P({1}), 1), std::invalid_argument);
}

TEST_CASE("dominance order") {
    CHECK(dominates(P({5}), P({3, 2})));
    CHECK(dominates(P({3, 2}), P({3, 2})));
    CHECK_FALSE(dominates(P({3, 2}), P({5})));
    CHECK_FALSE(dominates(P({3, 3}), P({4, 1, 1})));
    CHECK_FALSE(dominates(P({4, 1, 1}), P({3, 3})));
    CHECK_THROWS_AS(dominates(P({2}), P({3})), std::invalid_argument);
}
