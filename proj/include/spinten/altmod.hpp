#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinten/meataxe.hpp"
#include "spinten/modrep.hpp"

namespace spinten {

/// A GF(2) module together with an optional commuting scalar action J of the
/// field GF(4) (J^2 + J + I = 0); gf4_dim is the dimension over GF(4).
struct AltModule {
    Rep rep;
    std::optional<BitMatrix> j;

    int gf4_dim() const { return j ? rep.degree / 2 : rep.degree; }
};

/// One absolutely irreducible constituent of some D^lambda restricted to
/// Alt(n). Three realizations occur:
///  - split None: the whole restriction, absolutely irreducible over GF(2);
///  - split +/- with j: the restriction stays GF(2)-irreducible but carries
///    GF(4) scalars; the two flavors share the matrices and differ by J vs
///    J + I;
///  - split +/- without j: the restriction decomposes over GF(2) already and
///    mod holds one summand.
struct AltIrreducible {
    Partition lambda;
    SplitTag split = SplitTag::None;
    AltModule mod;

    int dim() const { return mod.gf4_dim(); }
    std::string label() const;
};

/// Labelled Alt(n) irreducibles from restricting every D^lambda, lambda
/// 2-regular, in descending lexicographic label order ("+" before "-").
std::vector<AltIrreducible> alt_irreducibles(int n, uint64_t seed);

/// Tensor product over GF(4). When both operands carry J the Kronecker
/// square restricts to the subspace where the two scalar actions agree.
AltModule tensor_gf4(const AltModule& a, const AltModule& b);

/// Generators plus J (when present): GF(4)-submodules are exactly the
/// invariant subspaces of this system.
Rep extended_system(const AltModule& m);

IrredCertificate gf4_irreducible_cert(const AltModule& m, uint64_t seed);

/// Irreducible over GF(4) with only scalar endomorphisms.
bool absolutely_irreducible(const AltModule& m, uint64_t seed);

/// Label within the Alt(n) list of an absolutely irreducible module, found
/// by GF(2) rationalization plus transport of J; empty when nothing matches.
std::optional<std::string> identify(const AltModule& m,
                                    const std::vector<AltIrreducible>& alts,
                                    uint64_t seed);

}  // namespace spinten
