#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace adq {

// Packed GF(2) vector. Bit i of word i/64 is coordinate i; bits past len are
// kept zero so equality and hashing are plain word comparisons.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVector from_string(const std::string& bits);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    bool is_zero() const;
    std::size_t popcount() const;

    // Index of the first set bit, or size() if none.
    std::size_t first_set() const;

    // Dot product over GF(2).
    bool dot(const BitVector& other) const;

    bool operator==(const BitVector& other) const {
        return len_ == other.len_ && words_ == other.words_;
    }
    bool operator!=(const BitVector& other) const { return !(*this == other); }

    // Lexicographic order on the bit string (coordinate 0 first).
    bool operator<(const BitVector& other) const;

    std::string to_string() const;

    // First word; only meaningful when size() <= 64. Search engines use this
    // to run on raw words.
    std::uint64_t word0() const { return words_.empty() ? 0 : words_[0]; }
    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense GF(2) matrix, row-major BitVectors.
class BinMatrix {
  public:
    BinMatrix() = default;
    BinMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}
    explicit BinMatrix(std::vector<BitVector> rows);

    static BinMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const BitVector& row(std::size_t i) const { return data_[i]; }
    BitVector& row(std::size_t i) { return data_[i]; }
    bool get(std::size_t i, std::size_t j) const { return data_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { data_[i].set(j, v); }

    void append_row(const BitVector& r);

    BitVector column(std::size_t j) const;
    BinMatrix transpose() const;

    // Columns listed in `cols`, in that order.
    BinMatrix select_columns(const std::vector<std::size_t>& cols) const;

    // m * x^T over GF(2); x must have length cols().
    BitVector mul_vector(const BitVector& x) const;

    bool operator==(const BinMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> data_;
};

// All of these work on copies; arguments are never mutated.
std::size_t rank(const BinMatrix& m);

// Rows form a basis of { x : m * x^T = 0 }; row count = cols - rank.
BinMatrix kernel(const BinMatrix& m);

// Reduced row echelon form; pivot column indices returned in order.
BinMatrix rref(const BinMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr);

// Row spaces compared via canonical RREF.
bool same_row_space(const BinMatrix& a, const BinMatrix& b);

// True if v is in the row space of m.
bool in_row_space(const BinMatrix& m, const BitVector& v);

// Incremental echelon basis over one 64-bit word; used by rank-heavy loops.
class WordBasis {
  public:
    // Reduces v against the basis; returns the residual (0 if dependent).
    std::uint64_t reduce(std::uint64_t v) const {
        for (std::size_t i = 0; i < n_; ++i) {
            if (v & leads_[i]) v ^= rows_[i];
        }
        return v;
    }
    // Inserts v if independent; returns true if the dimension grew.
    bool insert(std::uint64_t v) {
        v = reduce(v);
        if (!v) return false;
        rows_[n_] = v;
        leads_[n_] = std::uint64_t(1) << (63 - std::countl_zero(v));
        ++n_;
        return true;
    }
    std::size_t dim() const { return n_; }

  private:
    std::uint64_t rows_[64] = {};
    std::uint64_t leads_[64] = {};
    std::size_t n_ = 0;
};

}  // namespace adq
