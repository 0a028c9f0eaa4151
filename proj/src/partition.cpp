#include "spinten/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace spinten {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_multiset(std::vector<int> xs) {
    xs.erase(std::remove(xs.begin(), xs.end(), 0), xs.end());
    std::sort(xs.begin(), xs.end(), std::greater<int>());
    return Partition(std::move(xs));
}

int Partition::h2() const {
    int c = 0;
    for (int p : parts_)
        if (p % 2 == 0) ++c;
    return c;
}

bool Partition::is_two_regular() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] == parts_[i - 1]) return false;
    return true;
}

bool Partition::has_only_odd_parts() const {
    for (int p : parts_)
        if (p % 2 == 0) return false;
    return true;
}

bool Partition::has_odd_distinct_parts() const {
    return has_only_odd_parts() && is_two_regular();
}

Partition Partition::remove_part(int j) const {
    if (j < 1 || j > h())
        throw std::out_of_range("remove_part: index out of range");
    std::vector<int> ps = parts_;
    ps.erase(ps.begin() + (j - 1));
    return Partition(std::move(ps));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

namespace {

void enum_rec(int rest, int maxpart, bool distinct, bool odd,
              std::vector<int>& acc, std::vector<Partition>& out) {
    if (rest == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
        if (odd && p % 2 == 0) continue;
        acc.push_back(p);
        enum_rec(rest - p, distinct ? p - 1 : p, distinct, odd, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate(Family family, int n) {
    if (n < 0) throw std::invalid_argument("enumerate: n must be >= 0");
    bool distinct = family == Family::TwoRegular || family == Family::OddDistinct ||
                    family == Family::BensonSplit;
    bool odd = family == Family::OddParts || family == Family::OddDistinct;
    std::vector<Partition> out;
    std::vector<int> acc;
    enum_rec(n, n, distinct, odd, acc, out);
    if (family == Family::BensonSplit) {
        std::vector<Partition> kept;
        for (auto& lam : out)
            if (benson_split(lam)) kept.push_back(lam);
        out = std::move(kept);
    }
    return out;
}

bool benson_split(const Partition& lambda) {
    if (!lambda.is_two_regular())
        throw not_two_regular("benson_split: partition is not 2-regular");
    for (int k = 1; 2 * k - 1 <= lambda.h(); ++k) {
        int a = lambda.part(2 * k - 1), b = lambda.part(2 * k);
        if (a - b > 2) return false;
        if ((a + b) % 4 == 2) return false;
    }
    return true;
}

std::vector<int> dbl_seq(const Partition& lambda) {
    std::vector<int> out;
    for (int p : lambda.parts()) {
        out.push_back((p + 2) / 2);  // ceil((p+1)/2)
        out.push_back((p - 1) / 2);  // floor((p-1)/2)
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<int> dblb_seq(const Partition& lambda) {
    std::vector<int> out;
    for (int p : lambda.parts()) {
        out.push_back((p + 1) / 2);
        out.push_back(p / 2);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

Partition to_partition(const std::vector<int>& seq) {
    auto p = try_partition(seq);
    if (!p)
        throw std::invalid_argument("to_partition: sequence is not a partition");
    return *p;
}

std::optional<Partition> try_partition(const std::vector<int>& seq) {
    std::vector<int> s = seq;
    while (!s.empty() && s.back() == 0) s.pop_back();
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] <= 0) return std::nullopt;
        if (i > 0 && s[i - 1] < s[i]) return std::nullopt;
    }
    return Partition(std::move(s));
}

Partition beta_n(int n) {
    if (n < 1) throw std::invalid_argument("beta_n: n must be >= 1");
    return to_partition(dbl_seq(Partition({n})));
}

Partition regularize(const Partition& lambda) {
    // Ladder s = r + c holds positions (1,s-1),...,(s-1,1); sliding nodes to
    // the top k positions of each ladder makes row r collect one node from
    // every ladder holding at least r nodes.
    int h = lambda.h();
    int maxs = h + lambda.part(1);  // ladders range over 2..h+lambda_1
    std::vector<int> count(maxs + 1, 0);
    for (int r = 1; r <= h; ++r)
        for (int s = r + 1; s <= r + lambda.part(r); ++s) ++count[s];
    std::vector<int> rows;
    for (int r = 1;; ++r) {
        int len = 0;
        for (int s = 2; s <= maxs; ++s)
            if (count[s] >= r) ++len;
        if (len == 0) break;
        rows.push_back(len);
    }
    Partition out = to_partition(rows);
    if (!out.is_two_regular())
        throw std::logic_error("regularize: output not 2-regular");
    return out;
}

Partition two_core(const Partition& lambda) {
    // First-column abacus: beads b_i = lambda_i + h - i on two runners; the
    // core packs each runner's beads into its lowest positions.
    int h = lambda.h();
    if (h == 0) return Partition();
    std::vector<int> runner_count(2, 0);
    for (int i = 1; i <= h; ++i) {
        int b = lambda.part(i) + h - i;
        ++runner_count[b % 2];
    }
    std::vector<int> beads;
    for (int r = 0; r < 2; ++r)
        for (int k = 0; k < runner_count[r]; ++k) beads.push_back(r + 2 * k);
    std::sort(beads.begin(), beads.end(), std::greater<int>());
    std::vector<int> parts;
    for (int i = 1; i <= h; ++i) {
        int p = beads[i - 1] - (h - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

std::vector<long long> content(const Partition& lambda, int p) {
    if (p < 2) throw std::invalid_argument("content: p must be >= 2");
    std::vector<long long> cnt(p, 0);
    for (int r = 1; r <= lambda.h(); ++r)
        for (int c = 1; c <= lambda.part(r); ++c)
            ++cnt[((c - r) % p + p) % p];
    return cnt;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("dominates: weights differ");
    int sa = 0, sb = 0;
    for (int k = 1; k <= std::max(a.h(), b.h()); ++k) {
        sa += a.part(k);
        sb += b.part(k);
        if (sa < sb) return false;
    }
    return true;
}

}  // namespace spinten
