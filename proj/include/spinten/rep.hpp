#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinten/bitmatrix.hpp"
#include "spinten/partition.hpp"

namespace spinten {

enum class GroupKind { Sym, Alt, Young };

struct GroupTag {
    GroupKind kind = GroupKind::Sym;
    int n = 0;
    std::vector<int> comp;  // Young only

    bool operator==(const GroupTag& o) const {
        return kind == o.kind && n == o.n && comp == o.comp;
    }
    std::string str() const;
};

enum class SplitTag { None, Plus, Minus };

struct RepLabel {
    Partition lambda;
    SplitTag split = SplitTag::None;

    bool operator==(const RepLabel& o) const {
        return lambda == o.lambda && split == o.split;
    }
    bool operator<(const RepLabel& o) const {
        if (lambda != o.lambda) return lambda < o.lambda;
        return static_cast<int>(split) < static_cast<int>(o.split);
    }
    std::string str() const;
};

/// A matrix representation: ordered generator matrices acting on row vectors.
/// Sym(n) generators are the Coxeter transpositions s_1..s_{n-1};
/// Alt(n) generators are {s1*s2} followed by {s1*s_k : 3 <= k <= n-1};
/// Young(comp) generators are the non-cut Coxeter transpositions.
struct Rep {
    int degree = 0;
    std::vector<BitMatrix> gens;
    GroupTag tag;
    std::optional<RepLabel> label;

    void check() const;  // shape/invertibility sanity
    uint64_t digest() const;

    void save(std::ostream& os) const;
    static Rep load(std::istream& is);
};

/// Kronecker product generator-wise; degrees multiply.
Rep tensor(const Rep& a, const Rep& b);

/// Dual module: inverse-transpose generators.
Rep dual(const Rep& r);

/// Restriction along words: subgroup generator i is the product of ambient
/// generators words[i] (left to right), with new group tag.
Rep restrict_words(const Rep& r, const std::vector<std::vector<int>>& words,
                   GroupTag new_tag);

/// Alt(n) restriction of a Sym(n) representation.
Rep restrict_to_alt(const Rep& r);

/// Restriction of a Sym(n) representation to Sym(n-1) (drop last generator).
Rep restrict_to_sym_minus1(const Rep& r);

/// Restriction to the Young subgroup of a composition.
Rep young_restrict(const Rep& r, const std::vector<int>& comp);

/// Conjugation of an Alt(n) representation by the odd permutation s1:
/// s1 (s1 s2) s1 = (s1 s2)^{-1}, s1 (s1 s_k) s1 = s1 s_k for k >= 3.
Rep conjugate_by_s1(const Rep& r);

}  // namespace spinten
