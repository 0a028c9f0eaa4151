#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "spinten/spin_chars.hpp"

using namespace spinten;

namespace {

Partition P(std::vector<int> xs) { return Partition(std::move(xs)); }

Partition ones(int n) { return Partition(std::vector<int>(size_t(n), 1)); }

}  // namespace

TEST_CASE("path enumeration on small shapes") {
    // () -> (5) along alpha = (5): one direct step (a = 0) plus the
    // two-part splittings (4,1), (3,2) which end elsewhere.
    auto paths = enumerate_paths(P({5}), P({5}));
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].a == 0);
    CHECK(paths[0].chain.back() == P({5}));

    // alpha = (3,1,1) to lambda = (3,2): either the direct route (3) ->
    // (3,1) -> (3,2) with one grow step, or the split start (2,1) -> (3,1)
    // -> (3,2) with three non-direct steps.
    auto p2 = enumerate_paths(P({3, 2}), P({3, 1, 1}));
    for (auto& p : p2) {
        CHECK(p.chain.front() == P({}));
        CHECK(p.chain.back() == P({3, 2}));
        for (auto& stage : p.chain) CHECK(stage.is_two_regular());
        CHECK(int(p.chain.size()) == 4);  // h(alpha) + 1 stages
    }
    REQUIRE(p2.size() == 2);
    CHECK(std::min(p2[0].a, p2[1].a) == 1);
    CHECK(std::max(p2[0].a, p2[1].a) == 3);

    // Stages must stay 2-regular: along alpha = (3,3,3) the second new part
    // 3 is blocked, so reaching (6,3) goes through (6) only.
    auto p3 = enumerate_paths(P({6, 3}), P({3, 3, 3}));
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].a == 1);
    CHECK(p3[0].chain[2] == P({6}));
}

TEST_CASE("parity is the mod-2 path count at a <= 1") {
    for (int n = 2; n <= 9; ++n)
        for (auto& lam : enumerate(Family::TwoRegular, n))
            for (auto& alpha : enumerate(Family::OddParts, n)) {
                int low = 0;
                for (auto& p : enumerate_paths(lam, alpha))
                    if (p.a <= 1) ++low;
                CHECK(zeta_parity(lam, alpha) == low % 2);
            }
}

TEST_CASE("signed values on the exceptional n = 5 data") {
    CHECK(std::abs(spin_char(P({3, 2}), P({5}))) == 1);
    CHECK(spin_char(P({3, 2}), ones(5)) == 4);
    CHECK(spin_char(P({4, 1}), ones(5)) == 6);
    CHECK(spin_char(P({5}), ones(5)) == 4);
    CHECK(std::abs(spin_char(P({5}), P({5}))) == 1);
    CHECK(std::abs(spin_char(P({5}), P({3, 1, 1}))) == 2);
    CHECK(std::abs(spin_char(P({5}), P({1, 1, 1, 1, 1}))) == 4);
}

TEST_CASE("degree oracle") {
    for (int n = 2; n <= 11; ++n)
        for (auto& lam : enumerate(Family::TwoRegular, n))
            CHECK(spin_char(lam, ones(n)) == spin_degree_formula(lam));
    // Basic spin degree 2^{floor((n-1)/2)}.
    for (int n = 2; n <= 11; ++n) {
        long long expect = 1;
        for (int k = 0; k < (n - 1) / 2; ++k) expect *= 2;
        CHECK(spin_degree_formula(P({n})) == expect);
    }
}

TEST_CASE("magnitude law for the one-row label") {
    for (int n = 2; n <= 11; ++n) {
        auto tables = basic_spin_tables(n);
        for (auto& [alpha, mag] : tables.magnitudes) {
            CHECK(std::abs(spin_char(P({n}), alpha)) == mag);
            long long expect = 1;
            for (int k = 0; k < (alpha.h() - 1) / 2; ++k) expect *= 2;
            CHECK(mag == expect);
        }
    }
}

TEST_CASE("parity agreement between the two tiers") {
    for (int n = 2; n <= 10; ++n)
        for (auto& lam : enumerate(Family::TwoRegular, n))
            for (auto& alpha : enumerate(Family::OddParts, n)) {
                long long v = spin_char(lam, alpha);
                CHECK((v % 2 != 0) == (zeta_parity(lam, alpha) == 1));
                auto lb = zeta_valuation_lb(lam, alpha);
                if (!lb.has_value()) {
                    CHECK(v == 0);
                } else {
                    long long pow2 = 1;
                    for (int k = 0; k < *lb; ++k) pow2 *= 2;
                    CHECK(v % pow2 == 0);
                }
            }
}

TEST_CASE("divisibility predicate (i)") {
    for (int n = 2; n <= 11; ++n)
        for (auto& lam : enumerate(Family::OddDistinct, n))
            for (auto& alpha : enumerate(Family::OddParts, n))
                CHECK(pred_odd_value_i(lam, alpha) ==
                      (spin_char(lam, alpha) % 2 != 0));
    CHECK_THROWS_AS(pred_odd_value_i(P({2, 1}), P({3})), case_shape_mismatch);
    CHECK_THROWS_AS(pred_odd_value_i(P({3}), P({4})), case_shape_mismatch);
}

TEST_CASE("divisibility predicate (ii)") {
    // lambda = (1), c = 3, label (6,1): odd exactly on (7) and (3,3,1).
    CHECK(pred_odd_value_ii(P({1}), 3, P({7})));
    CHECK(pred_odd_value_ii(P({1}), 3, P({3, 3, 1})));
    // The e = 1 split collides with the part 1 of lambda: the two surviving
    // paths cancel and the value is even (it is 0).
    CHECK_FALSE(pred_odd_value_ii(P({1}), 3, P({5, 1, 1})));
    CHECK(spin_char(P({6, 1}), P({5, 1, 1})) == 0);
    // lambda = (5), c = 3: the e = 1 split collides with 2c - e = 5.
    CHECK_FALSE(pred_odd_value_ii(P({5}), 3, P({5, 5, 1})));
    CHECK(spin_char(P({6, 5}), P({5, 5, 1})) % 2 == 0);
    // e = c survives every collision.
    CHECK(pred_odd_value_ii(P({3}), 3, P({3, 3, 3})));
    CHECK(spin_char(P({6, 3}), P({3, 3, 3})) % 2 != 0);
    // Exhaustive agreement with computed parity.
    for (int n = 7; n <= 12; ++n)
        for (int c = 3; 2 * c < n; c += 2)
            for (auto& lam : enumerate(Family::OddDistinct, n - 2 * c)) {
                std::vector<int> parts = lam.parts();
                parts.push_back(2 * c);
                Partition label = Partition::from_multiset(parts);
                for (auto& alpha : enumerate(Family::OddParts, n))
                    CHECK(pred_odd_value_ii(lam, c, alpha) ==
                          (spin_char(label, alpha) % 2 != 0));
            }
    CHECK_THROWS_AS(pred_odd_value_ii(P({1}), 2, P({5})), case_shape_mismatch);
}

TEST_CASE("divisibility predicate (iii)") {
    // Label (2c,2d): every odd-class value is even; values not divisible by
    // 4 occur only on the listed classes; the anchor (c,c,d,d) is one.
    for (int c = 3; c <= 5; c += 2)
        for (int d = 1; d < c; d += 2) {
            int n = 2 * c + 2 * d;
            Partition label({2 * c, 2 * d});
            for (auto& alpha : enumerate(Family::OddParts, n)) {
                long long v = spin_char(label, alpha);
                CHECK(v % 2 == 0);
                if (v % 4 != 0) CHECK(pred_not_div4_iii(c, d, alpha));
            }
            Partition anchor({c, c, d, d});
            CHECK(pred_not_div4_iii(c, d, anchor));
            CHECK(spin_char(label, anchor) % 4 != 0);
        }
    // The list is only necessary, not sufficient: (7,1) is the e = 1
    // production for (6,2) but the value there is 0.
    CHECK(pred_not_div4_iii(3, 1, P({7, 1})));
    CHECK(spin_char(P({6, 2}), P({7, 1})) == 0);
    CHECK_THROWS_AS(pred_not_div4_iii(1, 3, P({7, 1})), case_shape_mismatch);
}

TEST_CASE("difference classes of the basic spin pair") {
    // Odd n: the two A_n constituents differ only on the class of (n).
    for (int n : {5, 7, 9}) {
        auto t = basic_spin_tables(n);
        REQUIRE(t.difference_classes.size() == 1);
        CHECK(t.difference_classes[0] == P({n}));
    }
    // n = 0 mod 4: the odd-distinct two-part classes.
    auto t8 = basic_spin_tables(8);
    REQUIRE(t8.difference_classes.size() == 2);
    CHECK(t8.difference_classes[0] == P({7, 1}));
    CHECK(t8.difference_classes[1] == P({5, 3}));
    // n = 2 mod 4: no splitting, no difference classes.
    CHECK(basic_spin_tables(6).difference_classes.empty());
}

TEST_CASE("principal factor multiplicity") {
    CHECK(spin_principal_multiplicity(P({5})) == 1);       // h2 = 0
    CHECK(spin_principal_multiplicity(P({4, 1})) == 1);    // h2 = 1
    CHECK(spin_principal_multiplicity(P({4, 2})) == 2);    // h2 = 2
    CHECK(spin_principal_multiplicity(P({6, 4, 2})) == 2); // h2 = 3
    CHECK(spin_principal_multiplicity(P({8, 6, 4, 2})) == 4);
    CHECK_THROWS_AS(spin_principal_multiplicity(P({2, 2})), not_two_regular);
}

TEST_CASE("candidate filters") {
    auto f5 = candidate_filters(5);
    CHECK_FALSE(f5.empty);
    REQUIRE(f5.nu_candidates.size() >= 1);
    bool has41 = false;
    for (auto& nu : f5.nu_candidates)
        if (nu == P({4, 1})) has41 = true;
    CHECK(has41);
    CHECK(candidate_filters(6).empty);   // n = 2 mod 4
    CHECK(candidate_filters(10).empty);  // n = 2 mod 4
    CHECK_FALSE(candidate_filters(7).empty);
    CHECK_FALSE(candidate_filters(8).empty);
}
