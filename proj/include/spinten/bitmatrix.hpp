#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

namespace spinten {

struct shape_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense GF(2) matrix, row-major, 64 bits per word, pad bits zero.
/// Vectors are row vectors; a representation acts on the right (v -> v*g).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
          w_(static_cast<size_t>(rows) * wpr_, 0) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("BitMatrix: negative shape");
    }

    static BitMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return wpr_; }

    bool get(int r, int c) const {
        return (w_[static_cast<size_t>(r) * wpr_ + c / 64] >> (c % 64)) & 1;
    }
    void set(int r, int c, bool v) {
        uint64_t& word = w_[static_cast<size_t>(r) * wpr_ + c / 64];
        uint64_t bit = uint64_t(1) << (c % 64);
        if (v)
            word |= bit;
        else
            word &= ~bit;
    }

    const uint64_t* row(int r) const { return w_.data() + static_cast<size_t>(r) * wpr_; }
    uint64_t* row(int r) { return w_.data() + static_cast<size_t>(r) * wpr_; }

    void xor_rows(int dst, int src);
    bool row_is_zero(int r) const;

    BitMatrix operator*(const BitMatrix& o) const;
    BitMatrix operator+(const BitMatrix& o) const;
    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
    }
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

    BitMatrix transpose() const;
    BitMatrix kron(const BitMatrix& o) const;
    BitMatrix row_slice(int r) const;            // 1 x cols
    BitMatrix vstack(const BitMatrix& o) const;  // same cols

    int rank() const;
    /// Reduced row echelon form with zero rows dropped; pivot columns out.
    BitMatrix rref(std::vector<int>* pivots = nullptr) const;
    /// Basis (as rows, RREF) of { v : v * this = 0 }.
    BitMatrix nullspace() const;
    std::optional<BitMatrix> inverse() const;

    bool is_zero() const;
    uint64_t digest() const;  // FNV-1a over shape and payload

    void save(std::ostream& os) const;
    static BitMatrix load(std::istream& is);

private:
    int rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> w_;
};

/// Multiply a raw packed row vector by M (v has M.rows() logical bits);
/// result packed with M.cols() logical bits.
std::vector<uint64_t> vec_mul(const std::vector<uint64_t>& v, const BitMatrix& m);

/// X with X * A = B, i.e. the rows of B expressed over the rows of A.
/// Empty optional if some row of B is outside the row space.
std::optional<BitMatrix> solve_rowspace(const BitMatrix& a, const BitMatrix& b);

/// Incremental RREF basis; supports spinning algorithms.
class EchelonBasis {
public:
    explicit EchelonBasis(int cols)
        : cols_(cols), wpr_((cols + 63) / 64) {}

    int dim() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    /// Pivot columns in ascending order, aligned with to_matrix() rows.
    std::vector<int> pivots() const;

    /// Reduces v against the basis (in place); true iff v was independent
    /// (and is now part of the basis).
    bool insert(std::vector<uint64_t> v);
    /// Reduces a copy; true iff v lies in the span.
    bool contains(std::vector<uint64_t> v) const;

    /// Basis rows sorted by pivot column; fully reduced.
    BitMatrix to_matrix() const;

private:
    void reduce(std::vector<uint64_t>& v, int* pivot_out) const;

    int cols_, wpr_;
    std::vector<std::vector<uint64_t>> rows_;
    std::vector<int> pivots_;
};

}  // namespace spinten
