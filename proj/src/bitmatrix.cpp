#include "spinten/bitmatrix.hpp"

#include <algorithm>
#include <cstring>
#include <istream>
#include <ostream>

namespace spinten {

namespace {

inline int lowest_bit(const uint64_t* w, int nwords) {
    for (int k = 0; k < nwords; ++k)
        if (w[k]) return 64 * k + __builtin_ctzll(w[k]);
    return -1;
}

}  // namespace

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::xor_rows(int dst, int src) {
    uint64_t* d = row(dst);
    const uint64_t* s = row(src);
    for (int k = 0; k < wpr_; ++k) d[k] ^= s[k];
}

bool BitMatrix::row_is_zero(int r) const {
    const uint64_t* w = row(r);
    for (int k = 0; k < wpr_; ++k)
        if (w[k]) return false;
    return true;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
    if (cols_ != o.rows_) throw shape_mismatch("BitMatrix::*: inner dims differ");
    BitMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        const uint64_t* a = row(i);
        uint64_t* dst = out.row(i);
        for (int k = 0; k < wpr_; ++k) {
            uint64_t word = a[k];
            while (word) {
                int j = 64 * k + __builtin_ctzll(word);
                word &= word - 1;
                const uint64_t* b = o.row(j);
                for (int t = 0; t < o.wpr_; ++t) dst[t] ^= b[t];
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::operator+(const BitMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw shape_mismatch("BitMatrix::+: shapes differ");
    BitMatrix out = *this;
    for (size_t k = 0; k < w_.size(); ++k) out.w_[k] ^= o.w_[k];
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        const uint64_t* a = row(i);
        for (int k = 0; k < wpr_; ++k) {
            uint64_t word = a[k];
            while (word) {
                int j = 64 * k + __builtin_ctzll(word);
                word &= word - 1;
                out.set(j, i, true);
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::kron(const BitMatrix& o) const {
    BitMatrix out(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (!get(i, j)) continue;
            for (int r = 0; r < o.rows_; ++r) {
                const uint64_t* s = o.row(r);
                uint64_t* d = out.row(i * o.rows_ + r);
                int shift = j * o.cols_;
                for (int k = 0; k < o.wpr_; ++k) {
                    uint64_t word = s[k];
                    while (word) {
                        int c = 64 * k + __builtin_ctzll(word);
                        word &= word - 1;
                        int cc = shift + c;
                        d[cc / 64] |= uint64_t(1) << (cc % 64);
                    }
                }
            }
        }
    return out;
}

BitMatrix BitMatrix::row_slice(int r) const {
    BitMatrix out(1, cols_);
    std::memcpy(out.row(0), row(r), sizeof(uint64_t) * wpr_);
    return out;
}

BitMatrix BitMatrix::vstack(const BitMatrix& o) const {
    if (cols_ != o.cols_) throw shape_mismatch("BitMatrix::vstack: cols differ");
    BitMatrix out(rows_ + o.rows_, cols_);
    std::memcpy(out.w_.data(), w_.data(), sizeof(uint64_t) * w_.size());
    std::memcpy(out.w_.data() + w_.size(), o.w_.data(), sizeof(uint64_t) * o.w_.size());
    return out;
}

int BitMatrix::rank() const {
    BitMatrix m = *this;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int piv = -1;
        for (int r = rank; r < rows_; ++r)
            if (m.get(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int k = 0; k < wpr_; ++k)
                std::swap(m.row(piv)[k], m.row(rank)[k]);
        for (int r = rank + 1; r < rows_; ++r)
            if (m.get(r, c)) m.xor_rows(r, rank);
        ++rank;
    }
    return rank;
}

BitMatrix BitMatrix::rref(std::vector<int>* pivots) const {
    EchelonBasis basis(cols_);
    for (int r = 0; r < rows_; ++r) {
        std::vector<uint64_t> v(row(r), row(r) + wpr_);
        basis.insert(std::move(v));
    }
    if (pivots) *pivots = basis.pivots();
    return basis.to_matrix();
}

BitMatrix BitMatrix::nullspace() const {
    // { v : v * this = 0 } = right kernel of the transpose.
    BitMatrix t = transpose();
    std::vector<int> pivots;
    BitMatrix r = t.rref(&pivots);
    std::vector<bool> is_pivot(rows_, false);
    for (int p : pivots) is_pivot[p] = true;
    int nfree = rows_ - static_cast<int>(pivots.size());
    BitMatrix out(nfree, rows_);
    int idx = 0;
    for (int f = 0; f < rows_; ++f) {
        if (is_pivot[f]) continue;
        out.set(idx, f, true);
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            if (r.get(static_cast<int>(pr), f)) out.set(idx, pivots[pr], true);
        ++idx;
    }
    return out.rref();
}

std::optional<BitMatrix> BitMatrix::inverse() const {
    if (rows_ != cols_) throw shape_mismatch("BitMatrix::inverse: not square");
    // Eliminate [this | I].
    BitMatrix m = *this;
    BitMatrix inv = identity(rows_);
    int rank = 0;
    for (int c = 0; c < cols_; ++c) {
        int piv = -1;
        for (int r = rank; r < rows_; ++r)
            if (m.get(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != rank) {
            for (int k = 0; k < wpr_; ++k) std::swap(m.row(piv)[k], m.row(rank)[k]);
            for (int k = 0; k < inv.wpr_; ++k)
                std::swap(inv.row(piv)[k], inv.row(rank)[k]);
        }
        for (int r = 0; r < rows_; ++r)
            if (r != rank && m.get(r, c)) {
                m.xor_rows(r, rank);
                inv.xor_rows(r, rank);
            }
        ++rank;
    }
    return inv;
}

bool BitMatrix::is_zero() const {
    for (uint64_t word : w_)
        if (word) return false;
    return true;
}

uint64_t BitMatrix::digest() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(rows_));
    mix(static_cast<uint64_t>(cols_));
    for (uint64_t word : w_) mix(word);
    return h;
}

void BitMatrix::save(std::ostream& os) const {
    auto put32 = [&](uint32_t x) {
        unsigned char b[4] = {static_cast<unsigned char>(x),
                              static_cast<unsigned char>(x >> 8),
                              static_cast<unsigned char>(x >> 16),
                              static_cast<unsigned char>(x >> 24)};
        os.write(reinterpret_cast<char*>(b), 4);
    };
    put32(static_cast<uint32_t>(rows_));
    put32(static_cast<uint32_t>(cols_));
    for (uint64_t word : w_) {
        unsigned char b[8];
        for (int k = 0; k < 8; ++k) b[k] = static_cast<unsigned char>(word >> (8 * k));
        os.write(reinterpret_cast<char*>(b), 8);
    }
}

BitMatrix BitMatrix::load(std::istream& is) {
    auto get32 = [&]() {
        unsigned char b[4];
        is.read(reinterpret_cast<char*>(b), 4);
        return uint32_t(b[0]) | uint32_t(b[1]) << 8 | uint32_t(b[2]) << 16 |
               uint32_t(b[3]) << 24;
    };
    uint32_t rows = get32(), cols = get32();
    if (!is) throw std::runtime_error("BitMatrix::load: truncated header");
    BitMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (uint64_t& word : m.w_) {
        unsigned char b[8];
        is.read(reinterpret_cast<char*>(b), 8);
        word = 0;
        for (int k = 0; k < 8; ++k) word |= uint64_t(b[k]) << (8 * k);
    }
    if (!is) throw std::runtime_error("BitMatrix::load: truncated payload");
    return m;
}

std::vector<uint64_t> vec_mul(const std::vector<uint64_t>& v, const BitMatrix& m) {
    std::vector<uint64_t> out(m.words_per_row(), 0);
    int nwords = (m.rows() + 63) / 64;
    for (int k = 0; k < nwords && k < static_cast<int>(v.size()); ++k) {
        uint64_t word = v[k];
        while (word) {
            int j = 64 * k + __builtin_ctzll(word);
            word &= word - 1;
            if (j >= m.rows()) break;
            const uint64_t* b = m.row(j);
            for (int t = 0; t < m.words_per_row(); ++t) out[t] ^= b[t];
        }
    }
    return out;
}

std::optional<BitMatrix> solve_rowspace(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw shape_mismatch("solve_rowspace: cols differ");
    // Eliminate [A | I] so every echelon row carries its expression over A.
    int n = a.rows();
    BitMatrix aug(n, a.cols() + n);
    for (int r = 0; r < n; ++r) {
        std::memcpy(aug.row(r), a.row(r), sizeof(uint64_t) * a.words_per_row());
        for (int c = 0; c < a.cols(); ++c) aug.set(r, c, a.get(r, c));
        aug.set(r, a.cols() + r, true);
    }
    EchelonBasis basis(aug.cols());
    for (int r = 0; r < n; ++r)
        basis.insert(std::vector<uint64_t>(aug.row(r), aug.row(r) + aug.words_per_row()));
    BitMatrix ech = basis.to_matrix();
    const std::vector<int>& pivots = basis.pivots();  // sorted, aligned with ech

    BitMatrix x(b.rows(), n);
    for (int r = 0; r < b.rows(); ++r) {
        std::vector<uint64_t> v(aug.words_per_row(), 0);
        for (int c = 0; c < b.cols(); ++c)
            if (b.get(r, c)) v[c / 64] |= uint64_t(1) << (c % 64);
        // Reduce the A-part; accumulate the transform part.
        for (size_t i = 0; i < pivots.size(); ++i) {
            int p = pivots[i];
            if (p >= a.cols()) break;
            if ((v[p / 64] >> (p % 64)) & 1)
                for (int k = 0; k < aug.words_per_row(); ++k)
                    v[k] ^= ech.row(static_cast<int>(i))[k];
        }
        for (int c = 0; c < a.cols(); ++c)
            if ((v[c / 64] >> (c % 64)) & 1) return std::nullopt;
        for (int c = 0; c < n; ++c) {
            int cc = a.cols() + c;
            if ((v[cc / 64] >> (cc % 64)) & 1) x.set(r, c, true);
        }
    }
    return x;
}

void EchelonBasis::reduce(std::vector<uint64_t>& v, int* pivot_out) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        int p = pivots_[i];
        if ((v[p / 64] >> (p % 64)) & 1)
            for (int k = 0; k < wpr_; ++k) v[k] ^= rows_[i][k];
    }
    *pivot_out = lowest_bit(v.data(), wpr_);
}

bool EchelonBasis::insert(std::vector<uint64_t> v) {
    v.resize(wpr_, 0);
    int pivot;
    reduce(v, &pivot);
    if (pivot < 0 || pivot >= cols_) return false;
    // Back-reduce existing rows to keep the basis fully reduced.
    for (size_t i = 0; i < rows_.size(); ++i)
        if ((rows_[i][pivot / 64] >> (pivot % 64)) & 1)
            for (int k = 0; k < wpr_; ++k) rows_[i][k] ^= v[k];
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool EchelonBasis::contains(std::vector<uint64_t> v) const {
    v.resize(wpr_, 0);
    int pivot;
    reduce(v, &pivot);
    return pivot < 0;
}

std::vector<int> EchelonBasis::pivots() const {
    std::vector<int> p = pivots_;
    std::sort(p.begin(), p.end());
    return p;
}

BitMatrix EchelonBasis::to_matrix() const {
    std::vector<size_t> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pivots_[a] < pivots_[b]; });
    BitMatrix out(static_cast<int>(rows_.size()), cols_);
    for (size_t i = 0; i < order.size(); ++i)
        std::memcpy(out.row(static_cast<int>(i)), rows_[order[i]].data(),
                    sizeof(uint64_t) * wpr_);
    return out;
}

}  // namespace spinten
