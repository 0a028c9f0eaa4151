#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "spinten/modrep.hpp"

using namespace spinten;

namespace {

Partition P(std::vector<int> xs) { return Partition(std::move(xs)); }

long long hook_length_dim(const Partition& lam) {
    // n! / product of hook lengths.
    std::vector<int> conj(size_t(lam.part(1)), 0);
    for (int r = 1; r <= lam.h(); ++r)
        for (int c = 1; c <= lam.part(r); ++c) ++conj[size_t(c - 1)];
    long long num = 1;
    for (int k = 2; k <= lam.n(); ++k) num *= k;
    long long den = 1;
    for (int r = 1; r <= lam.h(); ++r)
        for (int c = 1; c <= lam.part(r); ++c)
            den *= (lam.part(r) - c) + (conj[size_t(c - 1)] - r) + 1;
    return num / den;
}

long long multinomial(int n, const std::vector<int>& comp) {
    long long r = 1;
    int used = 0;
    for (int part : comp)
        for (int k = 1; k <= part; ++k) r = r * (++used) / k;
    (void)n;
    return r;
}

}  // namespace

TEST_CASE("tabloid bases and permutation modules") {
    TabloidBasis b(5, {1, 4});
    CHECK(b.dim() == 5);
    CHECK(perm_module(5, {1, 4}).degree == 5);
    CHECK(perm_module(5, {2, 3}).degree == 10);
    CHECK(perm_module(5, {1, 1, 3}).degree == 20);
    CHECK(perm_module(4, {2, 2}).degree == 6);
    for (auto comp : std::vector<std::vector<int>>{
             {1, 4}, {2, 3}, {1, 1, 3}, {2, 2, 1}})
        CHECK(TabloidBasis(5, comp).dim() == multinomial(5, comp));
    CHECK_THROWS_AS(perm_module(5, {1, 3}), bad_shape);

    Rep m = perm_module(4, {2, 2});
    m.check();
    // Generators are permutation matrices: each row has weight one.
    for (auto& g : m.gens)
        for (int i = 0; i < g.rows(); ++i) {
            int w = 0;
            for (int j = 0; j < g.cols(); ++j) w += g.get(i, j);
            CHECK(w == 1);
        }
    // Coxeter relation s_i^2 = 1.
    for (auto& g : m.gens) CHECK(g * g == BitMatrix::identity(m.degree));
}

TEST_CASE("Specht dimensions match the hook length formula") {
    for (int n = 1; n <= 8; ++n)
        for (auto& lam : enumerate(Family::All, n))
            CHECK(specht_rep(lam).degree == hook_length_dim(lam));
    CHECK(specht_rep(P({3, 2})).degree == 5);
    CHECK(specht_rep(P({2, 2, 1})).degree == 5);
}

TEST_CASE("Specht modules carry a genuine action") {
    for (auto& lam : {P({3, 2}), P({3, 1, 1}), P({2, 2, 2})}) {
        Rep s = specht_rep(lam);
        s.check();
        for (auto& g : s.gens) CHECK(g * g == BitMatrix::identity(s.degree));
        // Braid relation s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}.
        for (size_t k = 0; k + 1 < s.gens.size(); ++k)
            CHECK(s.gens[k] * s.gens[k + 1] * s.gens[k] ==
                  s.gens[k + 1] * s.gens[k] * s.gens[k + 1]);
    }
}

TEST_CASE("irreducible heads") {
    CHECK(irreducible_head(P({5})).degree == 1);
    CHECK(irreducible_head(P({4, 1})).degree == 4);
    // Basic spin of Sym(5): the Gram matrix of S^{(3,2)} has rank 4.
    CHECK(irreducible_head(P({3, 2})).degree == 4);
    CHECK(irreducible_head(P({2, 1})).degree == 2);
    CHECK(irreducible_head(P({4, 2})).degree == 4);
    CHECK(irreducible_head(P({3, 2, 1})).degree == 16);
    CHECK_THROWS_AS(irreducible_head(P({2, 2})), not_two_regular);
    Rep d = irreducible_head(P({4, 1}));
    REQUIRE(d.label.has_value());
    CHECK(d.label->lambda == P({4, 1}));
    CHECK(is_irreducible(d, 1));
}

TEST_CASE("labelled libraries") {
    auto lib5 = all_irreducibles(5);
    REQUIRE(lib5.size() == 3);
    CHECK(lib5[0].label->lambda == P({5}));
    CHECK(lib5[1].label->lambda == P({4, 1}));
    CHECK(lib5[2].label->lambda == P({3, 2}));
    CHECK(lib5[0].degree == 1);
    CHECK(lib5[1].degree == 4);
    CHECK(lib5[2].degree == 4);
    // Pairwise non-isomorphic.
    for (size_t i = 0; i < lib5.size(); ++i)
        for (size_t j = i + 1; j < lib5.size(); ++j)
            CHECK_FALSE(iso(lib5[i], lib5[j]));
    // Library sizes equal the 2-regular counts for n <= 7.
    for (int n = 2; n <= 7; ++n)
        CHECK(all_irreducibles(n).size() ==
              enumerate(Family::TwoRegular, n).size());
}

TEST_CASE("factor matching") {
    auto lib = all_irreducibles(5);
    auto labels = comp_factor_labels(perm_module(5, {1, 4}), lib, 1);
    REQUIRE(labels.size() == 2);
    CHECK(labels[0].lambda == P({5}));
    CHECK(labels[1].lambda == P({4, 1}));

    // M_2 = M^{(3,2)}: two trivial factors plus D^{(4,1)} and D^{(3,2)}.
    auto l2 = comp_factor_labels(perm_module(5, {2, 3}), lib, 1);
    std::map<Partition, int> mult;
    for (auto& l : l2) ++mult[l.lambda];
    CHECK(mult[P({5})] == 2);
    CHECK(mult[P({4, 1})] == 1);
    CHECK(mult[P({3, 2})] == 1);

    // Matching against the wrong library fails loudly.
    CHECK_THROWS_AS(
        comp_factor_labels(perm_module(5, {2, 3}), all_irreducibles(4), 1),
        unmatched_factor);
}

TEST_CASE("branching data") {
    auto b = branching_data(P({2, 1}), 1);
    REQUIRE(b.all.size() == 2);
    CHECK(b.all[0].lambda == P({2}));
    CHECK(b.all[1].lambda == P({2}));
    REQUIRE(b.by_residue.count(1) == 1);
    CHECK(b.by_residue.at(1).size() == 2);
    CHECK(b.by_residue.count(0) == 0);

    // (3,2) restricted to Sym(4): both removable nodes have residue 0.
    auto b32 = branching_data(P({3, 2}), 1);
    for (auto& [res, labels] : b32.by_residue) CHECK(res == 0);
    int total_dim = 0;
    auto lib4 = all_irreducibles(4);
    for (auto& l : b32.all)
        for (auto& r : lib4)
            if (r.label->lambda == l.lambda) total_dim += r.degree;
    CHECK(total_dim == 4);

    // JS partition: restriction stays irreducible.
    auto bjs = branching_data(P({3, 1}), 1);
    CHECK(bjs.all.size() == 1);
    CHECK(bjs.all[0].lambda == P({2, 1}));
}
