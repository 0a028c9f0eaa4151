#include "spinten/spin_chars.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace spinten {

namespace {

void check_pair(const Partition& lambda, const Partition& alpha) {
    if (lambda.n() != alpha.n())
        throw weight_mismatch("path enumeration: |lambda| != |alpha|");
    if (!lambda.is_two_regular())
        throw bad_family("path enumeration: lambda must be 2-regular");
    if (!alpha.has_only_odd_parts())
        throw bad_family("path enumeration: alpha must have odd parts");
}

bool contains(const std::vector<int>& parts, int v) {
    return std::find(parts.begin(), parts.end(), v) != parts.end();
}

void paths_rec(const Partition& lambda, const std::vector<int>& alpha, size_t j,
               BarPath& cur, std::vector<BarPath>& out) {
    if (j == alpha.size()) {
        if (cur.chain.back() == lambda) out.push_back(cur);
        return;
    }
    // Copy: recursion below grows cur.chain and would invalidate references.
    const Partition prev = cur.chain.back();
    const std::vector<int>& ps = prev.parts();
    int m = alpha[j];
    auto push = [&](Partition next, BarStep step, int da) {
        cur.chain.push_back(std::move(next));
        cur.steps.push_back(step);
        cur.a += da;
        paths_rec(lambda, alpha, j + 1, cur, out);
        cur.chain.pop_back();
        cur.steps.pop_back();
        cur.a -= da;
    };
    if (!contains(ps, m)) {
        std::vector<int> nx = ps;
        nx.push_back(m);
        push(Partition::from_multiset(std::move(nx)), {BarStep::NewPart, m, 0}, 0);
    }
    for (int y = 1; 2 * y < m; ++y) {
        int x = m - y;
        if (contains(ps, x) || contains(ps, y)) continue;
        std::vector<int> nx = ps;
        nx.push_back(x);
        nx.push_back(y);
        push(Partition::from_multiset(std::move(nx)), {BarStep::TwoParts, x, y}, 1);
    }
    for (int i = 0; i < prev.h(); ++i) {
        int v = ps[i] + m;
        bool clash = false;
        for (int k = 0; k < prev.h(); ++k)
            if (k != i && ps[k] == v) clash = true;
        if (clash) continue;
        std::vector<int> nx = ps;
        nx[i] = v;
        push(Partition::from_multiset(std::move(nx)), {BarStep::GrowPart, i + 1, v}, 1);
    }
}

}  // namespace

std::vector<BarPath> enumerate_paths(const Partition& lambda, const Partition& alpha) {
    check_pair(lambda, alpha);
    std::vector<BarPath> out;
    BarPath cur;
    cur.chain.push_back(Partition());
    paths_rec(lambda, alpha.parts(), 0, cur, out);
    return out;
}

int zeta_parity(const Partition& lambda, const Partition& alpha) {
    auto paths = enumerate_paths(lambda, alpha);
    long long odd_terms = 0;
    for (auto& p : paths)
        if (p.a <= 1) ++odd_terms;
    return static_cast<int>(odd_terms % 2);
}

std::optional<int> zeta_valuation_lb(const Partition& lambda, const Partition& alpha) {
    auto paths = enumerate_paths(lambda, alpha);
    if (paths.empty()) return std::nullopt;
    int best = paths[0].a / 2;
    for (auto& p : paths) best = std::min(best, p.a / 2);
    return best;
}

// ---------------------------------------------------------------------------
// Signed tier: Q-function expansion in the power-sum basis.
// ---------------------------------------------------------------------------

namespace {

long long llgcd(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

struct Frac {
    long long num = 0, den = 1;

    Frac() = default;
    Frac(long long n) : num(n) {}
    Frac(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = llgcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }
    Frac operator+(const Frac& o) const {
        __int128 n = (__int128)num * o.den + (__int128)o.num * den;
        __int128 d = (__int128)den * o.den;
        __int128 g = 1;
        {
            __int128 a = n < 0 ? -n : n, b = d;
            while (b) {
                __int128 t = a % b;
                a = b;
                b = t;
            }
            g = a ? a : 1;
        }
        return Frac((long long)(n / g), (long long)(d / g));
    }
    Frac operator*(const Frac& o) const {
        long long g1 = llgcd(num, o.den), g2 = llgcd(o.num, den);
        return Frac((num / (g1 ? g1 : 1)) * (o.num / (g2 ? g2 : 1)),
                    (den / (g2 ? g2 : 1)) * (o.den / (g1 ? g1 : 1)));
    }
    bool is_zero() const { return num == 0; }
};

// Sparse symmetric function in the power-sum basis, keyed by odd partitions
// stored as weakly decreasing vectors.
using PPoly = std::map<std::vector<int>, Frac>;

PPoly pmul(const PPoly& a, const PPoly& b) {
    PPoly out;
    for (auto& [ka, va] : a)
        for (auto& [kb, vb] : b) {
            std::vector<int> k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            std::sort(k.begin(), k.end(), std::greater<int>());
            Frac& slot = out[k];
            slot = slot + va * vb;
            if (slot.is_zero()) out.erase(k);
        }
    return out;
}

void padd(PPoly& a, const PPoly& b, long long scale) {
    for (auto& [k, v] : b) {
        Frac& slot = a[k];
        slot = slot + v * Frac(scale);
        if (slot.is_zero()) a.erase(k);
    }
}

long long z_order(const std::vector<int>& alpha) {
    // z_alpha = prod over part values i of i^{m_i} * m_i!
    long long z = 1;
    size_t i = 0;
    while (i < alpha.size()) {
        size_t j = i;
        while (j < alpha.size() && alpha[j] == alpha[i]) ++j;
        long long m = (long long)(j - i);
        for (long long t = 0; t < m; ++t) z *= alpha[i];
        for (long long t = 2; t <= m; ++t) z *= t;
        i = j;
    }
    return z;
}

// q_m = sum over odd partitions alpha of m of 2^{len(alpha)} / z_alpha p_alpha.
const PPoly& qfun(int m) {
    // deque: growth must not invalidate references already handed out
    static std::deque<PPoly> cache;
    if (m < (int)cache.size()) return cache[m];
    for (int t = (int)cache.size(); t <= m; ++t) {
        PPoly q;
        for (auto& alpha : enumerate(Family::OddParts, t)) {
            long long two = 1;
            for (int k = 0; k < alpha.h(); ++k) two *= 2;
            q[alpha.parts()] = Frac(two, z_order(alpha.parts()));
        }
        cache.push_back(std::move(q));
    }
    return cache[m];
}

// Q_{(a,b)} = q_a q_b + 2 sum_{i=1..b} (-1)^i q_{a+i} q_{b-i};  Q_{(a,0)} = q_a.
PPoly qq_two(int a, int b) {
    PPoly out = pmul(qfun(a), qfun(b));
    for (int i = 1; i <= b; ++i)
        padd(out, pmul(qfun(a + i), qfun(b - i)), (i % 2) ? -2 : 2);
    return out;
}

// Pfaffian expansion along the first row for parts lists of even length.
PPoly qq_list(std::vector<int> parts);

const PPoly& qq_memo(const std::vector<int>& parts) {
    static std::map<std::vector<int>, PPoly> cache;
    auto it = cache.find(parts);
    if (it == cache.end())
        it = cache.emplace(parts, qq_list(parts)).first;
    return it->second;
}

PPoly qq_list(std::vector<int> parts) {
    if (parts.empty()) {
        PPoly one;
        one[{}] = Frac(1);
        return one;
    }
    if (parts.size() == 2) return qq_two(parts[0], parts[1]);
    PPoly out;
    for (size_t j = 1; j < parts.size(); ++j) {
        std::vector<int> rest;
        for (size_t k = 1; k < parts.size(); ++k)
            if (k != j) rest.push_back(parts[k]);
        long long sgn = (j % 2) ? 1 : -1;  // (-1)^{j+1} with 1-based column j+1
        padd(out, pmul(qq_two(parts[0], parts[j]), qq_memo(rest)), sgn);
    }
    return out;
}

PPoly qfunction(const Partition& lambda) {
    std::vector<int> parts = lambda.parts();
    if (parts.size() % 2) parts.push_back(0);
    return qq_memo(parts);
}

}  // namespace

long long spin_char(const Partition& lambda, const Partition& alpha) {
    // The q-expansion caches below are shared; callers may be concurrent.
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    check_pair(lambda, alpha);
    const PPoly& q = qfunction(lambda);
    auto it = q.find(alpha.parts());
    Frac c = (it == q.end()) ? Frac(0) : it->second;
    // zeta = sign * z_alpha * c / 2^E with E = (len(alpha)+len(lambda)+eps)/2,
    // eps = (n - len(lambda)) mod 2; sign corrects for the odd-order lift of
    // the class representative.
    int n = lambda.n();
    int epsl = (n - lambda.h()) % 2;
    int E = (alpha.h() + lambda.h() + epsl) / 2;
    if ((alpha.h() + lambda.h() + epsl) % 2)
        throw std::logic_error("spin_char: non-integral normalization exponent");
    Frac v = c * Frac(z_order(alpha.parts()));
    long long den = 1;
    for (int t = 0; t < E; ++t) den *= 2;
    v = v * Frac(1, den);
    if (v.den != 1)
        throw std::logic_error("spin_char: non-integral character value");
    long long sign = (((n - alpha.h()) / 2) % 2) ? -1 : 1;
    return sign * v.num;
}

long long spin_degree_formula(const Partition& lambda) {
    int n = lambda.n();
    __int128 num = 1, den = 1;
    for (int t = 2; t <= n; ++t) num *= t;
    for (int p : lambda.parts())
        for (int t = 2; t <= p; ++t) den *= t;
    for (int i = 1; i <= lambda.h(); ++i)
        for (int j = i + 1; j <= lambda.h(); ++j) {
            num *= lambda.part(i) - lambda.part(j);
            den *= lambda.part(i) + lambda.part(j);
        }
    for (int t = 0; t < (n - lambda.h()) / 2; ++t) num *= 2;
    if (den == 0 || num % den)
        throw std::logic_error("spin_degree_formula: non-integral result");
    return (long long)(num / den);
}

// ---------------------------------------------------------------------------
// Divisibility predicates.
// ---------------------------------------------------------------------------

bool pred_odd_value_i(const Partition& lambda, const Partition& alpha) {
    if (!lambda.has_odd_distinct_parts())
        throw case_shape_mismatch("pred(i): lambda must have odd distinct parts");
    if (!alpha.has_only_odd_parts() || alpha.n() != lambda.n())
        throw case_shape_mismatch("pred(i): alpha must be an odd class of |lambda|");
    return alpha == lambda;
}

bool pred_odd_value_ii(const Partition& lambda, int c, const Partition& alpha) {
    if (!lambda.has_odd_distinct_parts())
        throw case_shape_mismatch("pred(ii): lambda must have odd distinct parts");
    if (c < 1 || c % 2 == 0)
        throw case_shape_mismatch("pred(ii): c must be odd and positive "
                                  "(even c readings are not implemented)");
    int n = lambda.n() + 2 * c;
    if (!alpha.has_only_odd_parts() || alpha.n() != n)
        throw case_shape_mismatch("pred(ii): alpha must be an odd class of |lambda|+2c");
    for (int j = 1; j <= lambda.h(); ++j) {
        std::vector<int> parts = lambda.remove_part(j).parts();
        parts.push_back(lambda.part(j) + 2 * c);
        if (alpha == Partition::from_multiset(parts)) return true;
    }
    const std::vector<int>& lp = lambda.parts();
    auto has_part = [&lp](int v) {
        return std::find(lp.begin(), lp.end(), v) != lp.end();
    };
    for (int e = 1; e <= c; e += 2) {
        // Splitting 2c as (2c-e) + e with e < c contributes an even path
        // count whenever either summand already occurs in lambda: the two
        // bar-paths rebuilding 2c from those parts cancel modulo 2 (or are
        // blocked by 2-regularity).  Only e = c survives a collision.
        if (e < c && (has_part(e) || has_part(2 * c - e))) continue;
        std::vector<int> parts = lp;
        parts.push_back(2 * c - e);
        parts.push_back(e);
        if (alpha == Partition::from_multiset(parts)) return true;
    }
    return false;
}

bool pred_not_div4_iii(int c, int d, const Partition& alpha) {
    if (!(c > d && d >= 1 && c % 2 && d % 2))
        throw case_shape_mismatch("pred(iii): need c > d >= 1 both odd");
    int n = 2 * c + 2 * d;
    if (!alpha.has_only_odd_parts() || alpha.n() != n)
        throw case_shape_mismatch("pred(iii): alpha must be an odd class of 2c+2d");
    for (int e = 1; 2 * e <= n; e += 2)
        if (alpha == Partition::from_multiset({n - e, e})) return true;
    for (int e = 1; e < 2 * c; e += 2)
        for (int f = 1; f < 2 * d; f += 2)
            if (alpha == Partition::from_multiset({2 * c - e, e, 2 * d - f, f}))
                return true;
    return false;
}

BasicSpinTables basic_spin_tables(int n) {
    if (n < 2) throw std::invalid_argument("basic_spin_tables: n must be >= 2");
    BasicSpinTables t;
    t.n = n;
    for (auto& alpha : enumerate(Family::OddParts, n)) {
        long long mag = 1;
        for (int k = 0; k < (alpha.h() - 1) / 2; ++k) mag *= 2;
        t.magnitudes[alpha] = mag;
    }
    if (n % 2 == 1) {
        t.difference_classes.push_back(Partition({n}));
    } else if (n % 4 == 0) {
        for (auto& alpha : enumerate(Family::OddDistinct, n))
            if (alpha.h() == 2) t.difference_classes.push_back(alpha);
    }
    return t;
}

long long spin_principal_multiplicity(const Partition& lambda) {
    if (!lambda.is_two_regular())
        throw not_two_regular("spin_principal_multiplicity: not 2-regular");
    long long m = 1;
    for (int k = 0; k < lambda.h2() / 2; ++k) m *= 2;
    return m;
}

CandidateFilters candidate_filters(int n) {
    if (n < 5) throw std::invalid_argument("candidate_filters: n must be >= 5");
    CandidateFilters f;
    f.n = n;
    std::set<Partition> nus;
    auto add_if_2regular = [&](const std::vector<int>& seq) {
        auto p = try_partition(seq);
        if (p && p->is_two_regular() && p->n() == n) nus.insert(*p);
    };
    if (n % 4 == 2) {
        f.empty = true;
        f.rationale = "n = 2 mod 4: the basic spin module extends to the "
                      "symmetric group and no product with it is irreducible";
        return f;
    }
    if (n % 2 == 1) {
        f.max_h_lambda = 4;
        for (int b = 1; 2 * b < n; ++b) {
            add_if_2regular({n - b, b});
            add_if_2regular(dbl_seq(Partition({n - b, b})));
        }
        f.rationale = "n odd: product label must be (n-b,b) or dbl(n-b,b); "
                      "the split factor has at most 4 rows";
    } else {
        f.max_h_lambda = 6;
        for (int b = 1; b <= n / 2 - 2; ++b) {
            add_if_2regular({n - b, b});
            add_if_2regular(dbl_seq(Partition({n - b, b})));
        }
        // Second case: factors of S(p(n-a-b,a,b)) with a,b = +-1 mod 4.
        for (auto& nu : enumerate(Family::TwoRegular, n))
            if (nu.h() <= 4) nus.insert(nu);
        for (int c = 1; c < n; c += 2)
            for (int d = 1; d <= c; d += 2) {
                if (n - c - d < 1) continue;
                if ((c % 4) != (d % 4)) continue;
                add_if_2regular(dbl_seq(
                    Partition::from_multiset({n - c - d, c, d})));
            }
        f.rationale = "n = 0 mod 4: two-row labels with b <= n/2-2 and their "
                      "doubles, labels with at most 4 rows, and doubles of "
                      "three-part shapes with c = d = +-1 mod 4; the split "
                      "factor has at most 4 rows (first case) or 6 (second)";
    }
    f.nu_candidates.assign(nus.begin(), nus.end());
    return f;
}

}  // namespace spinten
