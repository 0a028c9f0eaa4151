#pragma once

#include <map>
#include <vector>

#include "spinten/meataxe.hpp"
#include "spinten/partition.hpp"
#include "spinten/rep.hpp"

namespace spinten {

struct bad_shape : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct unmatched_factor : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Basis of a permutation module on row-equivalence classes of tableaux,
/// encoded as words: word[i] = block containing the entry i+1.
struct TabloidBasis {
    int n = 0;
    std::vector<std::vector<int>> words;  // ascending lexicographic
    std::map<std::vector<int>, int> index;

    explicit TabloidBasis(int n, const std::vector<int>& comp);
    int dim() const { return static_cast<int>(words.size()); }
};

/// Permutation module of a composition of n: Coxeter generators s_1..s_{n-1}
/// acting on tabloid words by place transposition.
Rep perm_module(int n, const std::vector<int>& comp);

/// Standard polytabloids of shape lambda as row vectors in the tabloid basis
/// (characteristic 2: signs vanish).
BitMatrix polytabloid_matrix(const Partition& lambda, const TabloidBasis& basis);

/// Specht module: action on the standard polytabloid basis.
Rep specht_rep(const Partition& lambda);

/// Head of the Specht module modulo the radical of the bilinear form
/// (lambda 2-regular); carries its partition label.
Rep irreducible_head(const Partition& lambda);

/// All labelled irreducibles of Sym(n), in descending lexicographic label
/// order (the 2-regular enumeration order).
std::vector<Rep> all_irreducibles(int n);

/// Labels of the given composition factors, matched by isomorphism against a
/// labelled library; sorted ascending by (dimension, label). Throws
/// unmatched_factor when a factor matches no library member.
std::vector<RepLabel> match_factors(const std::vector<Rep>& factors,
                                    const std::vector<Rep>& library);

/// chop + match in one step.
std::vector<RepLabel> comp_factor_labels(const Rep& rep,
                                         const std::vector<Rep>& library,
                                         uint64_t seed);

/// Composition factors of the restriction to Sym(n-1), split by the residue
/// of the removed node (content difference).
struct BranchingData {
    std::vector<RepLabel> all;                      // sorted
    std::map<int, std::vector<RepLabel>> by_residue;
};
BranchingData branching_data(const Partition& lambda, uint64_t seed);

}  // namespace spinten
