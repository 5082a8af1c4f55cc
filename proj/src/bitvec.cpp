#include "adq/bitvec.hpp"

#include <algorithm>
#include <stdexcept>

#include "adq/errors.hpp"

namespace adq {

BitVector BitVector::from_string(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw parse_error("invalid bit character '" + std::string(1, bits[i]) + "'");
    }
    return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (len_ != other.len_) throw std::invalid_argument("BitVector length mismatch in xor");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

bool BitVector::is_zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t BitVector::popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

std::size_t BitVector::first_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return len_;
}

bool BitVector::dot(const BitVector& other) const {
    if (len_ != other.len_) throw std::invalid_argument("BitVector length mismatch in dot");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1u;
}

bool BitVector::operator<(const BitVector& other) const {
    // Coordinate 0 is most significant; the vector with 0 at the first
    // differing position is the smaller one.
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t diff = words_[i] ^ other.words_[i];
        if (diff) {
            const int bit = std::countr_zero(diff);
            return !((words_[i] >> bit) & 1u);
        }
    }
    return len_ < other.len_;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BinMatrix::BinMatrix(std::vector<BitVector> rows) {
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols_) throw std::invalid_argument("ragged rows in BinMatrix");
    data_ = std::move(rows);
}

BinMatrix BinMatrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<BitVector> v;
    v.reserve(rows.size());
    for (const auto& s : rows) v.push_back(BitVector::from_string(s));
    return BinMatrix(std::move(v));
}

void BinMatrix::append_row(const BitVector& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch in append_row");
    data_.push_back(r);
    ++rows_;
}

BitVector BinMatrix::column(std::size_t j) const {
    BitVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.set(i, data_[i].get(j));
    return c;
}

BinMatrix BinMatrix::transpose() const {
    BinMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (data_[i].get(j)) t.set(j, i, true);
    return t;
}

BinMatrix BinMatrix::select_columns(const std::vector<std::size_t>& cols) const {
    BinMatrix s(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (data_[i].get(cols[j])) s.set(i, j, true);
    return s;
}

BitVector BinMatrix::mul_vector(const BitVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in mul_vector");
    BitVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) y.set(i, data_[i].dot(x));
    return y;
}

BinMatrix rref(const BinMatrix& m, std::vector<std::size_t>* pivot_cols) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i].get(c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r, BitVector(m.cols()));
    if (pivot_cols) *pivot_cols = std::move(pivots);
    return BinMatrix(std::move(rows));
}

std::size_t rank(const BinMatrix& m) {
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    return pivots.size();
}

BinMatrix kernel(const BinMatrix& m) {
    std::vector<std::size_t> pivots;
    const BinMatrix red = rref(m, &pivots);

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector x(m.cols());
        x.set(f, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (red.get(i, f)) x.set(pivots[i], true);
        basis.push_back(std::move(x));
    }
    BinMatrix k(std::move(basis));
    if (k.rows() == 0) k = BinMatrix(0, m.cols());
    return k;
}

bool same_row_space(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return rref(a) == rref(b);
}

bool in_row_space(const BinMatrix& m, const BitVector& v) {
    const BinMatrix red = rref(m);
    BitVector x = v;
    for (std::size_t i = 0; i < red.rows(); ++i) {
        const std::size_t lead = red.row(i).first_set();
        if (lead < x.size() && x.get(lead)) x ^= red.row(i);
    }
    return x.is_zero();
}

}  // namespace adq
