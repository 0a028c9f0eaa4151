#include "spinten/meataxe.hpp"

#include <random>
#include <sstream>

namespace spinten {

namespace {

uint64_t fnv(const std::string& s, uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<uint64_t> packed_row(const BitMatrix& m, int r) {
    return std::vector<uint64_t>(m.row(r), m.row(r) + m.words_per_row());
}

/// Deterministic stream of enveloping-algebra elements: each step combines
/// two pool members by product or sum, one matrix multiply per word.
class WordStream {
public:
    WordStream(const Rep& rep, uint64_t seed) : rep_(rep), rng_(seed) {
        for (const auto& g : rep.gens) pool_.push_back(g);
        if (pool_.empty()) pool_.push_back(BitMatrix::identity(rep.degree));
    }

    BitMatrix next() {
        ++index_;
        size_t x = rng_() % pool_.size();
        size_t y = rng_() % pool_.size();
        BitMatrix w = (rng_() % 2) ? pool_[x] * pool_[y] : pool_[x] + pool_[y];
        if (rng_() % 2) w = w + BitMatrix::identity(rep_.degree);
        pool_.push_back(w);
        if (pool_.size() > 16) pool_.erase(pool_.begin() + static_cast<long>(rep_.gens.size()));
        return w;
    }

    int index() const { return index_; }

private:
    const Rep& rep_;
    std::mt19937_64 rng_;
    std::vector<BitMatrix> pool_;
    int index_ = 0;
};

/// All nonzero GF(2) combinations of the rows of a small basis.
std::vector<std::vector<uint64_t>> null_combinations(const BitMatrix& basis) {
    std::vector<std::vector<uint64_t>> out;
    int k = basis.rows();
    for (uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<uint64_t> v(basis.words_per_row(), 0);
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1)
                for (int t = 0; t < basis.words_per_row(); ++t) v[t] ^= basis.row(i)[t];
        out.push_back(std::move(v));
    }
    return out;
}

BitMatrix spin_vector(const std::vector<uint64_t>& v, const Rep& rep,
                      int* dim_out) {
    EchelonBasis basis(rep.degree);
    std::vector<std::vector<uint64_t>> work;
    auto push = [&](const std::vector<uint64_t>& u) {
        std::vector<uint64_t> copy = u;
        if (basis.insert(std::move(copy))) work.push_back(u);
    };
    push(v);
    for (size_t i = 0; i < work.size() && basis.dim() < rep.degree; ++i)
        for (const auto& g : rep.gens) {
            push(vec_mul(work[i], g));
            if (basis.dim() == rep.degree) break;
        }
    if (dim_out) *dim_out = basis.dim();
    return basis.to_matrix();
}

}  // namespace

BitMatrix spin_up(const BitMatrix& vectors, const Rep& rep) {
    if (vectors.cols() != rep.degree)
        throw shape_mismatch("spin_up: vector length != degree");
    EchelonBasis basis(rep.degree);
    std::vector<std::vector<uint64_t>> work;
    auto push = [&](const std::vector<uint64_t>& u) {
        std::vector<uint64_t> copy = u;
        if (basis.insert(std::move(copy))) work.push_back(u);
    };
    for (int r = 0; r < vectors.rows(); ++r) push(packed_row(vectors, r));
    for (size_t i = 0; i < work.size() && basis.dim() < rep.degree; ++i)
        for (const auto& g : rep.gens) push(vec_mul(work[i], g));
    return basis.to_matrix();
}

IrredCertificate is_irreducible_cert(const Rep& rep, uint64_t seed, int word_budget) {
    if (rep.degree == 0) throw degree_zero("is_irreducible: degree 0");
    IrredCertificate cert;
    std::ostringstream tr;
    if (rep.degree == 1) {
        cert.irreducible = true;
        tr << "degree 1";
        cert.transcript = tr.str();
        cert.digest = fnv(cert.transcript, rep.digest());
        return cert;
    }
    if (rep.gens.empty()) {
        cert.irreducible = false;
        BitMatrix line(1, rep.degree);
        line.set(0, 0, true);
        cert.submodule = line;
        tr << "no generators: coordinate line invariant";
        cert.transcript = tr.str();
        cert.digest = fnv(cert.transcript, rep.digest());
        return cert;
    }

    WordStream stream(rep, seed);
    Rep transposed;
    transposed.degree = rep.degree;
    transposed.tag = rep.tag;
    for (const auto& g : rep.gens) transposed.gens.push_back(g.transpose());

    for (int t = 0; t < word_budget; ++t) {
        BitMatrix w = stream.next();
        BitMatrix null = w.nullspace();
        int k = null.rows();
        // k = degree (w = 0) is still decisive -- every vector must spin to
        // the full space -- but only affordable at tiny degree; it is also
        // the only singular word when the enveloping algebra is a field.
        if (k == 0 || (k == rep.degree && rep.degree > 16)) continue;
        if (k > 16) {
            // Too many combinations to certify; still usable to find a
            // proper submodule.
            for (int r = 0; r < k; ++r) {
                int dim = 0;
                BitMatrix s = spin_vector(packed_row(null, r), rep, &dim);
                if (dim < rep.degree) {
                    cert.irreducible = false;
                    cert.submodule = s;
                    cert.word_index = stream.index();
                    cert.nullity = k;
                    tr << "word " << stream.index() << " nullity " << k
                       << ": null basis vector " << r << " spins to dim " << dim;
                    cert.transcript = tr.str();
                    cert.digest = fnv(cert.transcript, rep.digest());
                    return cert;
                }
            }
            continue;
        }
        auto combos = null_combinations(null);
        for (size_t c = 0; c < combos.size(); ++c) {
            int dim = 0;
            BitMatrix s = spin_vector(combos[c], rep, &dim);
            if (dim < rep.degree) {
                cert.irreducible = false;
                cert.submodule = s;
                cert.word_index = stream.index();
                cert.nullity = k;
                tr << "word " << stream.index() << " nullity " << k
                   << ": null combination " << (c + 1) << " spins to dim " << dim;
                cert.transcript = tr.str();
                cert.digest = fnv(cert.transcript, rep.digest());
                return cert;
            }
        }
        // Norton dual check: one vector of the transpose nullspace must spin
        // to the full space under the transposed generators.
        BitMatrix nullt = w.transpose().nullspace();
        if (nullt.rows() == 0)
            throw certification_failure("is_irreducible: transpose nullity 0 "
                                        "for singular word");
        int dimt = 0;
        BitMatrix st = spin_vector(packed_row(nullt, 0), transposed, &dimt);
        if (dimt < rep.degree) {
            // Annihilator of the dual submodule is a proper submodule.
            BitMatrix sub = st.transpose().nullspace();
            cert.irreducible = false;
            cert.submodule = sub;
            cert.word_index = stream.index();
            cert.nullity = k;
            tr << "word " << stream.index() << " nullity " << k
               << ": dual vector spins to dim " << dimt
               << "; annihilator gives submodule dim " << sub.rows();
            cert.transcript = tr.str();
            cert.digest = fnv(cert.transcript, rep.digest());
            return cert;
        }
        cert.irreducible = true;
        cert.word_index = stream.index();
        cert.nullity = k;
        tr << "word " << stream.index() << " nullity " << k << ": all "
           << combos.size() << " null combinations spin full; dual vector spins full";
        cert.transcript = tr.str();
        cert.digest = fnv(cert.transcript, rep.digest());
        return cert;
    }
    throw certification_failure("is_irreducible: word budget exhausted without "
                                "a certified decision");
}

bool is_irreducible(const Rep& rep, uint64_t seed, int word_budget) {
    return is_irreducible_cert(rep, seed, word_budget).irreducible;
}

Rep sub_rep(const Rep& rep, const BitMatrix& basis) {
    if (basis.cols() != rep.degree)
        throw shape_mismatch("sub_rep: basis length != degree");
    int s = basis.rows();
    std::vector<int> pivots;
    for (int r = 0; r < s; ++r) {
        int p = -1;
        for (int c = 0; c < basis.cols(); ++c)
            if (basis.get(r, c)) {
                p = c;
                break;
            }
        if (p < 0) throw std::invalid_argument("sub_rep: zero basis row");
        pivots.push_back(p);
    }
    Rep out;
    out.degree = s;
    out.tag = rep.tag;
    for (const auto& g : rep.gens) {
        BitMatrix m = basis * g;
        BitMatrix a(s, s);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) a.set(i, j, m.get(i, pivots[j]));
        if (a * basis != m)
            throw std::invalid_argument("sub_rep: subspace not invariant");
        out.gens.push_back(std::move(a));
    }
    return out;
}

Rep quotient_rep(const Rep& rep, const BitMatrix& basis) {
    if (basis.cols() != rep.degree)
        throw shape_mismatch("quotient_rep: basis length != degree");
    int d = rep.degree, s = basis.rows();
    std::vector<bool> is_pivot(d, false);
    for (int r = 0; r < s; ++r) {
        int p = -1;
        for (int c = 0; c < d; ++c)
            if (basis.get(r, c)) {
                p = c;
                break;
            }
        if (p < 0) throw std::invalid_argument("quotient_rep: zero basis row");
        is_pivot[p] = true;
    }
    std::vector<int> free_cols;
    for (int c = 0; c < d; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    int q = d - s;
    Rep out;
    out.degree = q;
    out.tag = rep.tag;
    std::vector<int> pivot_of_row(s);
    {
        int r = 0;
        for (int c = 0; c < d; ++c)
            if (is_pivot[c]) pivot_of_row[r++] = c;
    }
    for (const auto& g : rep.gens) {
        BitMatrix a(q, q);
        for (int i = 0; i < q; ++i) {
            std::vector<uint64_t> v = packed_row(g, free_cols[i]);
            for (int r = 0; r < s; ++r) {
                int p = pivot_of_row[r];
                if ((v[p / 64] >> (p % 64)) & 1)
                    for (int k = 0; k < basis.words_per_row(); ++k)
                        v[k] ^= basis.row(r)[k];
            }
            for (int j = 0; j < q; ++j) {
                int c = free_cols[j];
                if ((v[c / 64] >> (c % 64)) & 1) a.set(i, j, true);
            }
        }
        out.gens.push_back(std::move(a));
    }
    return out;
}

std::vector<Rep> chop(const Rep& rep, uint64_t seed) {
    if (rep.degree == 0) return {};
    if (rep.gens.empty()) {
        // Trivial group: every coordinate line is a factor.
        Rep line;
        line.degree = 1;
        line.tag = rep.tag;
        return std::vector<Rep>(static_cast<size_t>(rep.degree), line);
    }
    IrredCertificate cert = is_irreducible_cert(rep, seed);
    if (cert.irreducible) return {rep};
    Rep sub = sub_rep(rep, *cert.submodule);
    Rep quo = quotient_rep(rep, *cert.submodule);
    std::vector<Rep> out = chop(sub, seed + 0x9E3779B97F4A7C15ull);
    std::vector<Rep> rest = chop(quo, seed + 0x3C6EF372FE94F82Aull);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

namespace {

/// Ordered spinning basis from a seed vector; full square matrix when the
/// module is irreducible, nullopt otherwise.
std::optional<BitMatrix> standard_basis(const Rep& rep,
                                        const std::vector<uint64_t>& v) {
    EchelonBasis test(rep.degree);
    std::vector<std::vector<uint64_t>> ordered;
    auto push = [&](const std::vector<uint64_t>& u) {
        std::vector<uint64_t> copy = u;
        if (test.insert(std::move(copy))) ordered.push_back(u);
    };
    push(v);
    for (size_t i = 0; i < ordered.size() && test.dim() < rep.degree; ++i)
        for (const auto& g : rep.gens) {
            push(vec_mul(ordered[i], g));
            if (test.dim() == rep.degree) break;
        }
    if (test.dim() != rep.degree) return std::nullopt;
    BitMatrix b(rep.degree, rep.degree);
    for (int r = 0; r < rep.degree; ++r)
        for (int k = 0; k < b.words_per_row(); ++k) b.row(r)[k] = ordered[r][k];
    return b;
}

std::vector<BitMatrix> rebase(const Rep& rep, const BitMatrix& b) {
    auto binv = b.inverse();
    if (!binv) throw std::logic_error("rebase: basis not invertible");
    std::vector<BitMatrix> out;
    for (const auto& g : rep.gens) out.push_back(b * g * *binv);
    return out;
}

/// Shared word evaluation for two representations with aligned generators.
struct PairStream {
    std::mt19937_64 rng;
    std::vector<BitMatrix> pa, pb;

    PairStream(const Rep& a, const Rep& b, uint64_t seed) : rng(seed) {
        for (const auto& g : a.gens) pa.push_back(g);
        for (const auto& g : b.gens) pb.push_back(g);
    }
    void next(BitMatrix* wa, BitMatrix* wb) {
        size_t x = rng() % pa.size();
        size_t y = rng() % pa.size();
        bool mul = rng() % 2, addid = rng() % 2;
        *wa = mul ? pa[x] * pa[y] : pa[x] + pa[y];
        *wb = mul ? pb[x] * pb[y] : pb[x] + pb[y];
        if (addid) {
            *wa = *wa + BitMatrix::identity(wa->rows());
            *wb = *wb + BitMatrix::identity(wb->rows());
        }
        pa.push_back(*wa);
        pb.push_back(*wb);
        if (pa.size() > 16) {
            pa.erase(pa.begin());
            pb.erase(pb.begin());
        }
    }
};

constexpr uint64_t kIsoSeed = 0xC0DEC0DEC0DEull;
constexpr int kIsoBudget = 200;

}  // namespace

std::optional<BitMatrix> iso_map(const Rep& a, const Rep& b) {
    if (a.degree != b.degree || a.gens.size() != b.gens.size() || !(a.tag == b.tag))
        return std::nullopt;
    if (a.gens.empty() || a.degree == 1) {
        for (size_t i = 0; i < a.gens.size(); ++i)
            if (a.gens[i] != b.gens[i]) return std::nullopt;
        return BitMatrix::identity(a.degree);
    }
    PairStream stream(a, b, kIsoSeed);
    for (int t = 0; t < kIsoBudget; ++t) {
        BitMatrix wa, wb;
        stream.next(&wa, &wb);
        BitMatrix na = wa.nullspace();
        BitMatrix nb = wb.nullspace();
        if (na.rows() != nb.rows()) return std::nullopt;  // nullity is an invariant
        int k = na.rows();
        if (k == 0 || k > 8) continue;
        auto sa = standard_basis(a, packed_row(na, 0));
        if (!sa) throw not_irreducible("iso: first input is reducible");
        auto ga = rebase(a, *sa);
        auto sainv = sa->inverse();
        for (auto& vb : null_combinations(nb)) {
            auto sb = standard_basis(b, vb);
            if (!sb) throw not_irreducible("iso: second input is reducible");
            if (rebase(b, *sb) == ga) return *sainv * *sb;
        }
        return std::nullopt;  // an isomorphism maps null(wa) onto null(wb)
    }
    throw certification_failure("iso: no usable word within budget");
}

bool iso(const Rep& a, const Rep& b) { return iso_map(a, b).has_value(); }

int endo_dim_commutant(const Rep& rep) {
    int d = rep.degree;
    if (d == 0) throw degree_zero("endo_dim_commutant: degree 0");
    if (rep.gens.empty()) return d * d;
    // Commutant = joint fixed space of X -> g^{-1} X g. With row-major
    // vectorization, vec(A X B) = vec(X) * (A^T kron B), so the fixed space
    // of one generator is the nullspace of kron(g^{-T}, g) + I.
    BitMatrix v = BitMatrix::identity(d * d);
    for (const auto& g : rep.gens) {
        auto ginv = g.inverse();
        if (!ginv)
            throw std::invalid_argument("endo_dim_commutant: singular generator");
        BitMatrix m =
            ginv->transpose().kron(g) + BitMatrix::identity(d * d);
        BitMatrix coeff = (v * m).nullspace();
        v = coeff * v;
        if (v.rows() == 0) break;
    }
    return v.rows();
}

int endo_dim_irreducible(const Rep& rep, uint64_t seed) {
    if (rep.degree == 0) throw degree_zero("endo_dim_irreducible: degree 0");
    if (rep.degree == 1 || rep.gens.empty()) return 1;
    WordStream stream(rep, seed);
    for (int t = 0; t < 200; ++t) {
        BitMatrix w = stream.next();
        BitMatrix null = w.nullspace();
        int k = null.rows();
        if (k == 0 || k > 8) continue;
        auto s0 = standard_basis(rep, packed_row(null, 0));
        if (!s0) throw not_irreducible("endo_dim_irreducible: reducible input");
        auto g0 = rebase(rep, *s0);
        int matches = 0;
        for (auto& v : null_combinations(null)) {
            auto s1 = standard_basis(rep, v);
            if (!s1) throw not_irreducible("endo_dim_irreducible: reducible input");
            if (rebase(rep, *s1) == g0) ++matches;
        }
        // matches = |Aut| = 2^e - 1.
        int e = 0;
        while ((1 << e) - 1 < matches) ++e;
        if ((1 << e) - 1 != matches)
            throw certification_failure("endo_dim_irreducible: automorphism "
                                        "count is not 2^e - 1");
        return e;
    }
    throw certification_failure("endo_dim_irreducible: no singular word found");
}

BitMatrix gf4_structure(const Rep& rep, uint64_t seed) {
    if (rep.degree == 0) throw degree_zero("gf4_structure: degree 0");
    WordStream stream(rep, seed);
    for (int t = 0; t < 200; ++t) {
        BitMatrix w = stream.next();
        BitMatrix null = w.nullspace();
        int k = null.rows();
        if (k == 0 || k > 8) continue;
        auto s0 = standard_basis(rep, packed_row(null, 0));
        if (!s0) throw not_irreducible("gf4_structure: reducible input");
        auto g0 = rebase(rep, *s0);
        auto s0inv = s0->inverse();
        for (auto& v : null_combinations(null)) {
            auto s1 = standard_basis(rep, v);
            if (!s1) throw not_irreducible("gf4_structure: reducible input");
            if (!(rebase(rep, *s1) == g0)) continue;
            // Endomorphism sending the reference null vector to v.
            BitMatrix phi = *s0inv * *s1;
            if (phi == BitMatrix::identity(rep.degree)) continue;
            if (phi * phi != phi + BitMatrix::identity(rep.degree))
                throw certification_failure("gf4_structure: endomorphism is "
                                            "not a GF(4) scalar");
            return phi;
        }
        throw certification_failure("gf4_structure: endomorphism field is GF(2)");
    }
    throw certification_failure("gf4_structure: no singular word found");
}

}  // namespace spinten
