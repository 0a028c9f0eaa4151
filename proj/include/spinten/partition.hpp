#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinten {

struct not_two_regular : std::domain_error {
    using std::domain_error::domain_error;
};

/// A partition: weakly decreasing sequence of positive integers.
/// Stored without trailing zeros; part(j) returns 0 for j > h().
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Reorders an arbitrary multiset of positive parts (p(mu) in the notation
    /// of the domain). Zeros are dropped.
    static Partition from_multiset(std::vector<int> xs);

    int n() const { return n_; }
    int h() const { return static_cast<int>(parts_.size()); }
    int h2() const;

    /// 1-based part access; 0 beyond the last part.
    int part(int j) const {
        return (j >= 1 && j <= h()) ? parts_[j - 1] : 0;
    }

    const std::vector<int>& parts() const { return parts_; }

    bool is_two_regular() const;
    bool has_only_odd_parts() const;
    bool has_odd_distinct_parts() const;

    /// Removes the j-th part (1-based) and reorders. Throws on bad index.
    Partition remove_part(int j) const;

    std::string str() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

enum class Family { All, TwoRegular, OddParts, OddDistinct, BensonSplit };

/// Complete, duplicate-free enumeration in descending lexicographic order.
std::vector<Partition> enumerate(Family family, int n);

/// Benson's splitting criterion for 2-regular partitions:
/// for every k >= 1, lambda_{2k-1} - lambda_{2k} <= 2 and
/// lambda_{2k-1} + lambda_{2k} != 2 (mod 4), missing parts read as 0.
bool benson_split(const Partition& lambda);

/// Raw double / bar-double sequences (may fail to be partitions).
/// Trailing zeros are dropped; inner zeros are kept.
std::vector<int> dbl_seq(const Partition& lambda);
std::vector<int> dblb_seq(const Partition& lambda);

/// Checked conversion; throws std::invalid_argument if the sequence has an
/// inner zero or is not weakly decreasing.
Partition to_partition(const std::vector<int>& seq);
std::optional<Partition> try_partition(const std::vector<int>& seq);

/// beta_n = dbl((n)); the basic spin label. Requires n >= 1.
Partition beta_n(int n);

/// James 2-regularization: nodes slide to the top of their ladders, the
/// ladder through (r,c) being the anti-diagonal {(r-t, c+t)}.
Partition regularize(const Partition& lambda);

/// 2-core via the first-column abacus on two runners.
Partition two_core(const Partition& lambda);

/// Residue content: counts of nodes with res(a,b) = b-a mod p.
std::vector<long long> content(const Partition& lambda, int p);

/// Dominance order: requires |a| = |b|; partial sums of a >= those of b.
bool dominates(const Partition& a, const Partition& b);

}  // namespace spinten
