#include "adq/code.hpp"

#include <algorithm>
#include <stdexcept>

#include "adq/errors.hpp"
#include "combinations.hpp"

namespace adq {

namespace {

constexpr std::uint64_t kEvenBits = 0x5555555555555555ull;

std::size_t qweight_words(const std::vector<std::uint64_t>& words) {
    std::size_t c = 0;
    for (auto w : words) c += std::popcount((w | (w >> 1)) & kEvenBits);
    return c;
}

// Coordinatewise multiplication by w on paired bits: (a,b) -> (a+b, a).
std::uint64_t mul_omega_word(std::uint64_t w) {
    const std::uint64_t a = w & kEvenBits;
    const std::uint64_t b = (w >> 1) & kEvenBits;
    return (a ^ b) | (a << 1);
}

BitVector mul_omega(const BitVector& v) {
    BitVector r(v.size());
    for (std::size_t i = 0; i + 1 < v.size(); i += 2) {
        const bool a = v.get(i), b = v.get(i + 1);
        r.set(i, a ^ b);
        r.set(i + 1, a);
    }
    return r;
}

// Swaps the two bits of every coordinate pair; <u,v> = dot(u, swap_pairs(v)).
BitVector swap_pairs(const BitVector& v) {
    BitVector r(v.size());
    for (std::size_t i = 0; i + 1 < v.size(); i += 2) {
        r.set(i, v.get(i + 1));
        r.set(i + 1, v.get(i));
    }
    return r;
}

}  // namespace

std::size_t qweight(const BitVector& word) {
    if (word.size() % 2 != 0) throw std::invalid_argument("qweight requires even length");
    return qweight_words(word.words());
}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

std::size_t WeightDistribution::min_distance() const {
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i]) return i;
    return 0;
}

AdditiveCode::AdditiveCode(std::size_t n, std::size_t r, BinMatrix gen)
    : n_(n), r_(r), gen_(std::move(gen)) {
    if (gen_.rows() != r_ || gen_.cols() != 2 * n_)
        throw std::invalid_argument("generator matrix must be r x 2n");
    if (rank(gen_) != r_)
        throw std::invalid_argument("degenerate generator matrix: rows are dependent");
}

AdditiveCode AdditiveCode::from_f4(const std::vector<F4Vector>& rows) {
    if (rows.empty()) throw std::invalid_argument("empty F4 generator");
    const std::size_t n = rows[0].size();
    BinMatrix gen(0, 2 * n);
    for (const auto& v : rows) {
        if (v.size() != n) throw std::invalid_argument("ragged F4 generator");
        gen.append_row(f4_expand(v));
        gen.append_row(f4_expand(v.scaled(F4Elem::omega())));
    }
    return AdditiveCode(n, 2 * rows.size(), std::move(gen));
}

std::string AdditiveCode::k_string() const {
    std::string s = std::to_string(r_ / 2);
    if (r_ % 2) s += ".5";
    return s;
}

WeightDistribution AdditiveCode::weight_distribution(std::size_t limit) const {
    if (r_ > limit)
        throw limit_error("weight enumeration refused: r = " + std::to_string(r_) +
                          " exceeds limit " + std::to_string(limit));
    WeightDistribution wd;
    wd.counts.assign(n_ + 1, 0);
    wd.counts[0] = 1;
    if (r_ == 0) return wd;

    // Gray-code walk: one generator xor per step.
    if (2 * n_ <= 64) {
        std::vector<std::uint64_t> rows(r_);
        for (std::size_t i = 0; i < r_; ++i) rows[i] = gen_.row(i).word0();
        std::uint64_t w = 0;
        for (std::uint64_t i = 1; i < (std::uint64_t(1) << r_); ++i) {
            w ^= rows[std::countr_zero(i)];
            ++wd.counts[std::popcount((w | (w >> 1)) & kEvenBits)];
        }
    } else {
        std::vector<std::uint64_t> w(gen_.row(0).words().size(), 0);
        for (std::uint64_t i = 1; i < (std::uint64_t(1) << r_); ++i) {
            const auto& row = gen_.row(std::countr_zero(i)).words();
            for (std::size_t j = 0; j < w.size(); ++j) w[j] ^= row[j];
            ++wd.counts[qweight_words(w)];
        }
    }
    return wd;
}

std::size_t AdditiveCode::min_distance(std::size_t limit) const {
    return weight_distribution(limit).min_distance();
}

std::size_t AdditiveCode::min_distance_auto(std::size_t limit) const {
    if (r_ <= limit) return min_distance(limit);
    return symplectic_dual().strength() + 1;
}

std::size_t AdditiveCode::strength() const {
    const std::size_t tmax = std::min(n_, r_ / 2);
    if (tmax == 0) return 0;

    // Columns as words; ambient dimension r fits one word for every code in
    // range of the enumeration limits.
    std::vector<std::uint64_t> cols;
    const bool fast = r_ <= 64;
    if (fast) {
        cols.resize(2 * n_);
        for (std::size_t j = 0; j < 2 * n_; ++j) cols[j] = gen_.column(j).word0();
    }

    for (std::size_t t = 1; t <= tmax; ++t) {
        auto subset = detail::first_combination(t);
        do {
            if (fast) {
                WordBasis basis;
                bool full = true;
                for (auto p : subset) {
                    if (!basis.insert(cols[2 * p]) || !basis.insert(cols[2 * p + 1])) {
                        full = false;
                        break;
                    }
                }
                if (!full) return t - 1;
            } else {
                if (rank(pair_submatrix(subset)) != 2 * t) return t - 1;
            }
        } while (detail::next_combination(subset, n_));
    }
    return tmax;
}

AdditiveCode AdditiveCode::symplectic_dual() const {
    BinMatrix swapped(0, 2 * n_);
    for (std::size_t i = 0; i < r_; ++i) swapped.append_row(swap_pairs(gen_.row(i)));
    BinMatrix dual_gen = kernel(swapped);
    return AdditiveCode(n_, 2 * n_ - r_, std::move(dual_gen));
}

bool AdditiveCode::is_symplectic_self_dual() const {
    if (r_ != n_) return false;
    std::vector<BitVector> swapped;
    swapped.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) swapped.push_back(swap_pairs(gen_.row(i)));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = i + 1; j < r_; ++j)
            if (gen_.row(i).dot(swapped[j])) return false;
    return true;
}

BBLinearityResult AdditiveCode::bb_linearity_test(std::size_t limit) const {
    if (n_ > limit)
        throw limit_error("codeline subset scan refused: n = " + std::to_string(n_) +
                          " exceeds limit " + std::to_string(limit));
    BBLinearityResult res;
    if (r_ > 64) throw limit_error("bb_linearity_test supports r <= 64");

    std::vector<std::uint64_t> cols(2 * n_);
    for (std::size_t j = 0; j < 2 * n_; ++j) cols[j] = gen_.column(j).word0();

    for (std::size_t s = 1; s <= n_; ++s) {
        auto subset = detail::first_combination(s);
        do {
            WordBasis basis;
            for (auto p : subset) {
                basis.insert(cols[2 * p]);
                basis.insert(cols[2 * p + 1]);
            }
            if (basis.dim() % 2 != 0) {
                res.linear = false;
                res.witness = subset;
                return res;
            }
        } while (detail::next_combination(subset, n_));
    }
    res.linear = true;
    return res;
}

bool AdditiveCode::is_f4_linear_literal() const {
    const BinMatrix red = rref(gen_);
    for (std::size_t i = 0; i < r_; ++i) {
        if (!in_row_space(red, mul_omega(gen_.row(i)))) return false;
    }
    return true;
}

BinaryLinearCode AdditiveCode::concatenate_322() const {
    BinMatrix gen(0, 3 * n_);
    for (std::size_t i = 0; i < r_; ++i) {
        const BitVector& row = gen_.row(i);
        BitVector out(3 * n_);
        for (std::size_t j = 0; j < n_; ++j) {
            const bool a = row.get(2 * j), b = row.get(2 * j + 1);
            out.set(3 * j, a);
            out.set(3 * j + 1, b);
            out.set(3 * j + 2, a ^ b);
        }
        gen.append_row(out);
    }
    return BinaryLinearCode(3 * n_, r_, std::move(gen));
}

AdditiveCode AdditiveCode::shorten(std::size_t coord) const {
    if (coord >= n_) throw std::invalid_argument("shorten: coordinate out of range");

    std::vector<BitVector> rows;
    rows.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) rows.push_back(gen_.row(i));

    // Clear the two columns of the pair; pivot rows are dropped.
    std::vector<std::size_t> pivots;
    for (std::size_t c : {2 * coord, 2 * coord + 1}) {
        std::size_t pivot = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].get(c) && std::find(pivots.begin(), pivots.end(), i) == pivots.end()) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != pivot && rows[i].get(c)) rows[i] ^= rows[pivot];
        pivots.push_back(pivot);
    }

    BinMatrix out(0, 2 * (n_ - 1));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (std::find(pivots.begin(), pivots.end(), i) != pivots.end()) continue;
        BitVector v(2 * (n_ - 1));
        std::size_t k = 0;
        for (std::size_t j = 0; j < 2 * n_; ++j) {
            if (j == 2 * coord || j == 2 * coord + 1) continue;
            v.set(k++, rows[i].get(j));
        }
        out.append_row(v);
    }
    return AdditiveCode(n_ - 1, r_ - pivots.size(), std::move(out));
}

BinMatrix AdditiveCode::pair_submatrix(const std::vector<std::size_t>& coords) const {
    std::vector<std::size_t> cols;
    cols.reserve(2 * coords.size());
    for (auto c : coords) {
        cols.push_back(2 * c);
        cols.push_back(2 * c + 1);
    }
    return gen_.select_columns(cols);
}

bool AdditiveCode::same_subspace(const AdditiveCode& other) const {
    return n_ == other.n_ && same_row_space(gen_, other.gen_);
}

BinaryLinearCode::BinaryLinearCode(std::size_t n2, std::size_t dim, BinMatrix gen)
    : n2_(n2), dim_(dim), gen_(std::move(gen)) {
    if (gen_.rows() != dim_ || gen_.cols() != n2_)
        throw std::invalid_argument("generator matrix must be dim x n");
    if (rank(gen_) != dim_) throw std::invalid_argument("degenerate generator matrix");
}

std::vector<std::uint64_t> BinaryLinearCode::weight_distribution(std::size_t limit) const {
    if (dim_ > limit)
        throw limit_error("weight enumeration refused: dim = " + std::to_string(dim_) +
                          " exceeds limit " + std::to_string(limit));
    std::vector<std::uint64_t> counts(n2_ + 1, 0);
    counts[0] = 1;
    if (dim_ == 0) return counts;
    std::vector<std::uint64_t> w(gen_.row(0).words().size(), 0);
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << dim_); ++i) {
        const auto& row = gen_.row(std::countr_zero(i)).words();
        std::size_t pc = 0;
        for (std::size_t j = 0; j < w.size(); ++j) {
            w[j] ^= row[j];
            pc += std::popcount(w[j]);
        }
        ++counts[pc];
    }
    return counts;
}

std::size_t BinaryLinearCode::min_distance(std::size_t limit) const {
    const auto counts = weight_distribution(limit);
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i]) return i;
    return 0;
}

std::uint64_t griesmer_bound(std::size_t dim, std::size_t d, std::size_t q) {
    if (dim < 1 || d < 1 || q < 2) throw std::invalid_argument("griesmer_bound: invalid arguments");
    std::uint64_t sum = 0;
    std::uint64_t qi = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (qi >= d) {
            sum += dim - i;  // remaining terms are all ceil(d/q^i) = 1
            break;
        }
        sum += (d + qi - 1) / qi;
        qi *= q;
    }
    return sum;
}

}  // namespace adq
