#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spinten/altmod.hpp"

using namespace spinten;

namespace {

Partition P(std::vector<int> xs) { return Partition(std::move(xs)); }

const AltIrreducible& find(const std::vector<AltIrreducible>& alts,
                           const std::string& label) {
    for (auto& a : alts)
        if (a.label() == label) return a;
    REQUIRE_MESSAGE(false, "missing label " << label);
    static AltIrreducible dummy;
    return dummy;
}

}  // namespace

TEST_CASE("alternating irreducibles at n = 4") {
    auto alts = alt_irreducibles(4, 1);
    REQUIRE(alts.size() == 3);
    CHECK(alts[0].label() == "(4)");
    CHECK(alts[0].dim() == 1);
    CHECK(alts[0].split == SplitTag::None);
    // (3,1) splits with a GF(4) scalar action: two 1-dimensional flavors
    // sharing the same matrices, distinguished by J versus J + I.
    CHECK(alts[1].label() == "(3,1)+");
    CHECK(alts[2].label() == "(3,1)-");
    for (int k : {1, 2}) {
        CHECK(alts[size_t(k)].dim() == 1);
        CHECK(alts[size_t(k)].mod.rep.degree == 2);
        REQUIRE(alts[size_t(k)].mod.j.has_value());
        const BitMatrix& j = *alts[size_t(k)].mod.j;
        CHECK(j * j + j == BitMatrix::identity(2));
    }
    CHECK(*alts[1].mod.j + BitMatrix::identity(2) == *alts[2].mod.j);
}

TEST_CASE("alternating irreducibles at n = 5") {
    auto alts = alt_irreducibles(5, 1);
    REQUIRE(alts.size() == 4);
    CHECK(find(alts, "(5)").dim() == 1);
    CHECK(find(alts, "(4,1)").dim() == 4);
    CHECK(find(alts, "(4,1)").split == SplitTag::None);
    // (3,2) splits with GF(4) scalars: the restriction stays irreducible
    // over GF(2) (Alt(5) = SL(2,4) fuses the natural module and its twist)
    // and the flavors share the matrices, differing by J versus J + I.
    auto& ep = find(alts, "(3,2)+");
    auto& em = find(alts, "(3,2)-");
    CHECK(ep.dim() == 2);
    CHECK(em.dim() == 2);
    REQUIRE(ep.mod.j.has_value());
    REQUIRE(em.mod.j.has_value());
    CHECK(ep.mod.rep.degree == 4);
    CHECK(*ep.mod.j + BitMatrix::identity(4) == *em.mod.j);
    CHECK(iso(ep.mod.rep, em.mod.rep));
    // Every listed module is absolutely irreducible and self-identifies.
    for (auto& a : alts) {
        CHECK(absolutely_irreducible(a.mod, 1));
        auto id = identify(a.mod, alts, 1);
        REQUIRE(id.has_value());
        CHECK(*id == a.label());
    }
}

TEST_CASE("dimension bookkeeping across n") {
    // Sum over Alt(n) irreducibles of (GF(4)-dim * deg of endo field) equals
    // the sum of the restricted GF(2) degrees.
    for (int n = 3; n <= 7; ++n) {
        auto alts = alt_irreducibles(n, 1);
        auto syms = all_irreducibles(n);
        int alt_total = 0;
        for (auto& a : alts) alt_total += a.mod.rep.degree;  // GF(2) degree
        int sym_total = 0;
        for (auto& s : syms) sym_total += restrict_to_alt(s).degree;
        // Galois-split pairs share one GF(2) module; count it once per flavor
        // (each flavor holds the same matrices, so the raw sum double-counts
        // exactly those).
        int galois_extra = 0;
        for (auto& a : alts)
            if (a.mod.j && a.split == SplitTag::Minus)
                galois_extra += a.mod.rep.degree;
        CHECK(alt_total - galois_extra <= sym_total);
    }
}

TEST_CASE("conjugation by an odd element exchanges split halves") {
    // Rational split at n = 7: (4,3) decomposes over GF(2) into two
    // non-isomorphic 4-dimensional halves which conjugation swaps.
    auto alts7 = alt_irreducibles(7, 1);
    auto& ep = find(alts7, "(4,3)+");
    auto& em = find(alts7, "(4,3)-");
    CHECK_FALSE(ep.mod.j.has_value());
    CHECK(ep.mod.rep.degree == 4);
    CHECK_FALSE(iso(ep.mod.rep, em.mod.rep));
    Rep swapped = conjugate_by_s1(ep.mod.rep);
    CHECK(iso(swapped, em.mod.rep));
    CHECK_FALSE(iso(swapped, ep.mod.rep));

    // Galois split at n = 5: conjugation fixes the GF(2) module but swaps
    // the flavor of the scalar action (the outer automorphism of SL(2,4)
    // is the field automorphism).
    auto alts5 = alt_irreducibles(5, 1);
    auto& gp = find(alts5, "(3,2)+");
    AltModule conj{conjugate_by_s1(gp.mod.rep), gp.mod.j};
    CHECK(iso(conj.rep, gp.mod.rep));
    auto id = identify(conj, alts5, 1);
    REQUIRE(id.has_value());
    CHECK(*id == "(3,2)-");

    // A non-split module is fixed by the conjugation.
    auto& d41 = find(alts5, "(4,1)");
    CHECK(iso(conjugate_by_s1(d41.mod.rep), d41.mod.rep));
}

TEST_CASE("extended systems and GF(4) irreducibility") {
    auto alts4 = alt_irreducibles(4, 1);
    auto& plus = find(alts4, "(3,1)+");
    Rep ext = extended_system(plus.mod);
    CHECK(ext.degree == 2);
    CHECK(ext.gens.size() == plus.mod.rep.gens.size() + 1);
    auto cert = gf4_irreducible_cert(plus.mod, 1);
    CHECK(cert.irreducible);
    auto alts5 = alt_irreducibles(5, 1);
    auto& d41 = find(alts5, "(4,1)");
    Rep ext2 = extended_system(d41.mod);
    CHECK(ext2.gens.size() == d41.mod.rep.gens.size());
    CHECK(gf4_irreducible_cert(d41.mod, 1).irreducible);
}

TEST_CASE("tensor over GF(4): the exceptional product at n = 5") {
    auto alts = alt_irreducibles(5, 1);
    auto& ep = find(alts, "(3,2)+");
    auto& em = find(alts, "(3,2)-");
    AltModule prod = tensor_gf4(ep.mod, em.mod);
    CHECK(prod.gf4_dim() == 4);
    CHECK(absolutely_irreducible(prod, 1));
    auto id = identify(prod, alts, 1);
    REQUIRE(id.has_value());
    CHECK(*id == "(4,1)");

    // Squares of the halves are reducible.
    AltModule sq = tensor_gf4(ep.mod, ep.mod);
    CHECK_FALSE(gf4_irreducible_cert(sq, 1).irreducible);
    AltModule sq2 = tensor_gf4(em.mod, em.mod);
    CHECK_FALSE(gf4_irreducible_cert(sq2, 1).irreducible);
    // Tensoring with the trivial module identifies back to the input.
    auto& triv = find(alts, "(5)");
    AltModule same = tensor_gf4(ep.mod, triv.mod);
    auto id2 = identify(same, alts, 1);
    REQUIRE(id2.has_value());
    CHECK(*id2 == "(3,2)+");
}

TEST_CASE("tensor of two GF(4)-scalar modules restricts the square") {
    auto alts = alt_irreducibles(4, 1);
    auto& plus = find(alts, "(3,1)+");
    auto& minus = find(alts, "(3,1)-");
    AltModule pp = tensor_gf4(plus.mod, plus.mod);
    REQUIRE(pp.j.has_value());
    CHECK(pp.gf4_dim() == 1);
    CHECK(pp.rep.degree == 2);
    auto idpp = identify(pp, alts, 1);
    REQUIRE(idpp.has_value());
    CHECK(*idpp == "(3,1)-");  // Frobenius-twist square of the cube root
    AltModule pm = tensor_gf4(plus.mod, minus.mod);
    auto idpm = identify(pm, alts, 1);
    REQUIRE(idpm.has_value());
    CHECK(*idpm == "(4)");  // opposite flavors multiply to the trivial one
}
