#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinten/rep.hpp"

namespace spinten {

struct degree_zero : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct certification_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_irreducible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Smallest generator-closed subspace containing the given row vectors;
/// returned as an RREF basis.
BitMatrix spin_up(const BitMatrix& vectors, const Rep& rep);

struct IrredCertificate {
    bool irreducible = false;
    // Proper invariant subspace (RREF) when reducible.
    std::optional<BitMatrix> submodule;
    int word_index = -1;  // index in the seeded word stream; -1 = structural
    int nullity = 0;
    std::string transcript;
    uint64_t digest = 0;
};

/// Norton-criterion irreducibility test with a seeded word stream.
/// Hard error (certification_failure) if the word budget is exhausted
/// without a decision.
IrredCertificate is_irreducible_cert(const Rep& rep, uint64_t seed,
                                     int word_budget = 200);
bool is_irreducible(const Rep& rep, uint64_t seed, int word_budget = 200);

/// Restriction of the action to an invariant subspace (basis in RREF).
Rep sub_rep(const Rep& rep, const BitMatrix& basis);
/// Induced action on the quotient by an invariant subspace (basis in RREF);
/// coset representatives are the non-pivot coordinates.
Rep quotient_rep(const Rep& rep, const BitMatrix& basis);

/// Full composition series factors (with multiplicity), deterministic given
/// the seed; factor multiset independent of the seed.
std::vector<Rep> chop(const Rep& rep, uint64_t seed);

/// Module isomorphism for irreducible inputs (standard-basis algorithm with
/// a deterministic shared word stream).
bool iso(const Rep& a, const Rep& b);

/// Explicit intertwiner F with g_a * F = F * g_b for every aligned generator
/// pair (row-vector convention); empty when the modules are not isomorphic.
std::optional<BitMatrix> iso_map(const Rep& a, const Rep& b);

/// Dimension of the commutant {X : gX = Xg for all generators}; exact linear
/// solve, any module (cost grows as degree^6 -- keep degrees modest).
int endo_dim_commutant(const Rep& rep);

/// Endomorphism-field degree e (End = GF(2^e)) of a GF(2)-irreducible
/// module, via standard-basis automorphism counting.
int endo_dim_irreducible(const Rep& rep, uint64_t seed);

/// A matrix J in the commutant with J^2 + J + I = 0, for GF(2)-irreducible
/// modules with endomorphism field GF(4).
BitMatrix gf4_structure(const Rep& rep, uint64_t seed);

}  // namespace spinten
