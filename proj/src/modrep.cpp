#include "spinten/modrep.hpp"

#include <algorithm>
#include <numeric>

namespace spinten {

TabloidBasis::TabloidBasis(int n_in, const std::vector<int>& comp) : n(n_in) {
    int total = std::accumulate(comp.begin(), comp.end(), 0);
    if (total != n || n < 0)
        throw bad_shape("TabloidBasis: composition does not sum to n");
    for (int c : comp)
        if (c < 1) throw bad_shape("TabloidBasis: nonpositive block");
    std::vector<int> w;
    for (size_t b = 0; b < comp.size(); ++b)
        w.insert(w.end(), static_cast<size_t>(comp[b]), static_cast<int>(b));
    do {
        index.emplace(w, static_cast<int>(words.size()));
        words.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

Rep perm_module(int n, const std::vector<int>& comp) {
    TabloidBasis basis(n, comp);
    Rep out;
    out.degree = basis.dim();
    out.tag = GroupTag{GroupKind::Sym, n, {}};
    for (int j = 1; j <= n - 1; ++j) {
        BitMatrix g(basis.dim(), basis.dim());
        for (int idx = 0; idx < basis.dim(); ++idx) {
            std::vector<int> w = basis.words[idx];
            std::swap(w[j - 1], w[j]);
            g.set(idx, basis.index.at(w), true);
        }
        out.gens.push_back(std::move(g));
    }
    return out;
}

namespace {

/// Standard tableaux of a shape: entry lists per row, rows and columns
/// strictly increasing. tab[r][c] holds the entry of cell (r, c), 0-based.
void standard_tableaux_rec(const std::vector<int>& shape, int next,
                           std::vector<std::vector<int>>& tab,
                           std::vector<int>& filled,
                           std::vector<std::vector<std::vector<int>>>& out) {
    int n = std::accumulate(shape.begin(), shape.end(), 0);
    if (next > n) {
        out.push_back(tab);
        return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
        int c = filled[r];
        if (c >= shape[r]) continue;
        if (r > 0 && filled[r - 1] <= c) continue;  // cell above not filled
        tab[r][c] = next;
        ++filled[r];
        standard_tableaux_rec(shape, next + 1, tab, filled, out);
        --filled[r];
    }
}

std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& lambda) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> tab;
    for (int p : lambda.parts()) tab.emplace_back(p, 0);
    std::vector<int> filled(lambda.parts().size(), 0);
    standard_tableaux_rec(lambda.parts(), 1, tab, filled, out);
    return out;
}

}  // namespace

BitMatrix polytabloid_matrix(const Partition& lambda, const TabloidBasis& basis) {
    auto tableaux = standard_tableaux(lambda);
    BitMatrix e(static_cast<int>(tableaux.size()), basis.dim());
    int ncols = lambda.h() ? lambda.part(1) : 0;
    for (size_t t = 0; t < tableaux.size(); ++t) {
        // Column entry lists, each run through all its permutations; in
        // characteristic 2 the polytabloid is the XOR over the column
        // stabilizer orbit of the tabloid.
        std::vector<std::vector<std::vector<int>>> col_perms(ncols);
        for (int c = 0; c < ncols; ++c) {
            std::vector<int> entries;
            for (int r = 0; r < lambda.h(); ++r)
                if (lambda.part(r + 1) > c) entries.push_back(tableaux[t][r][c]);
            std::sort(entries.begin(), entries.end());
            do {
                col_perms[c].push_back(entries);
            } while (std::next_permutation(entries.begin(), entries.end()));
        }
        std::vector<size_t> pick(ncols, 0);
        while (true) {
            std::vector<int> w(basis.n, 0);
            for (int c = 0; c < ncols; ++c)
                for (size_t r = 0; r < col_perms[c][pick[c]].size(); ++r)
                    w[col_perms[c][pick[c]][r] - 1] = static_cast<int>(r);
            int idx = basis.index.at(w);
            e.set(static_cast<int>(t), idx, !e.get(static_cast<int>(t), idx));
            int c = 0;
            while (c < ncols && ++pick[c] == col_perms[c].size()) pick[c++] = 0;
            if (c == ncols) break;
        }
    }
    return e;
}

Rep specht_rep(const Partition& lambda) {
    int n = lambda.n();
    TabloidBasis basis(n, lambda.parts());
    BitMatrix e = polytabloid_matrix(lambda, basis);
    Rep out;
    out.degree = e.rows();
    out.tag = GroupTag{GroupKind::Sym, n, {}};
    for (int j = 1; j <= n - 1; ++j) {
        // Image of each polytabloid under s_j: permute tabloid coordinates.
        BitMatrix m(e.rows(), e.cols());
        for (int idx = 0; idx < basis.dim(); ++idx) {
            std::vector<int> w = basis.words[idx];
            std::swap(w[j - 1], w[j]);
            int tgt = basis.index.at(w);
            for (int r = 0; r < e.rows(); ++r)
                if (e.get(r, idx)) m.set(r, tgt, true);
        }
        auto x = solve_rowspace(e, m);
        if (!x)
            throw std::logic_error("specht_rep: image left the polytabloid span");
        out.gens.push_back(std::move(*x));
    }
    return out;
}

Rep irreducible_head(const Partition& lambda) {
    if (!lambda.is_two_regular())
        throw not_two_regular("irreducible_head: label must be 2-regular");
    int n = lambda.n();
    TabloidBasis basis(n, lambda.parts());
    BitMatrix e = polytabloid_matrix(lambda, basis);
    Rep specht = specht_rep(lambda);
    BitMatrix gram = e * e.transpose();
    BitMatrix rad = gram.nullspace().rref();
    Rep head = rad.rows() == 0 ? specht : quotient_rep(specht, rad);
    head.label = RepLabel{lambda, SplitTag::None};
    return head;
}

std::vector<Rep> all_irreducibles(int n) {
    std::vector<Rep> out;
    for (const Partition& lambda : enumerate(Family::TwoRegular, n))
        out.push_back(irreducible_head(lambda));
    return out;
}

std::vector<RepLabel> match_factors(const std::vector<Rep>& factors,
                                    const std::vector<Rep>& library) {
    std::vector<std::pair<int, RepLabel>> found;
    for (const Rep& f : factors) {
        bool matched = false;
        for (const Rep& lib : library) {
            if (lib.degree != f.degree || !lib.label) continue;
            if (iso(f, lib)) {
                found.emplace_back(f.degree, *lib.label);
                matched = true;
                break;
            }
        }
        if (!matched)
            throw unmatched_factor("match_factors: factor of degree " +
                                   std::to_string(f.degree) +
                                   " matches no library member");
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return a.second < b.second;
              });
    std::vector<RepLabel> out;
    for (auto& p : found) out.push_back(p.second);
    return out;
}

std::vector<RepLabel> comp_factor_labels(const Rep& rep,
                                         const std::vector<Rep>& library,
                                         uint64_t seed) {
    return match_factors(chop(rep, seed), library);
}

BranchingData branching_data(const Partition& lambda, uint64_t seed) {
    int n = lambda.n();
    if (n < 2) throw bad_shape("branching_data: need n >= 2");
    Rep restriction = restrict_to_sym_minus1(irreducible_head(lambda));
    std::vector<Rep> library = all_irreducibles(n - 1);
    BranchingData data;
    data.all = comp_factor_labels(restriction, library, seed);
    auto big = content(lambda, 2);
    for (const RepLabel& lab : data.all) {
        auto small = content(lab.lambda, 2);
        int res = -1;
        for (int i = 0; i < 2; ++i)
            if (big[i] == small[i] + 1) res = i;
        if (res < 0)
            throw std::logic_error("branching_data: factor content is not one "
                                   "node short");
        data.by_residue[res].push_back(lab);
    }
    return data;
}

}  // namespace spinten
