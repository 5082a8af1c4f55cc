#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adq/bitvec.hpp"
#include "adq/gf4.hpp"

namespace adq {

// Enumerating 2^r codewords is refused above this binary dimension unless the
// caller raises the limit explicitly.
inline constexpr std::size_t kDefaultEnumLimit = 28;

// Subset scans over n codelines are refused above this length.
inline constexpr std::size_t kDefaultSubsetLimit = 24;

// Quaternary weight of a binary word with paired coordinates: the number of
// coordinate pairs (2i, 2i+1) that are not 00. Length must be even.
std::size_t qweight(const BitVector& word);

struct WeightDistribution {
    // counts[i] = number of codewords of quaternary weight i, i = 0..n.
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const;
    // First nonzero index > 0, or 0 for the zero code.
    std::size_t min_distance() const;
    bool operator==(const WeightDistribution& other) const { return counts == other.counts; }
};

struct BBLinearityResult {
    bool linear = false;
    // On failure: indices of a codeline subset of odd binary span.
    std::vector<std::size_t> witness;
};

class BinaryLinearCode;

// Additive quaternary [n, k]_4 code, k = r/2, held as r independent binary
// generators of length 2n with coordinate i on bits (2i, 2i+1).
class AdditiveCode {
  public:
    // Throws std::invalid_argument if gen is not r x 2n of full row rank.
    AdditiveCode(std::size_t n, std::size_t r, BinMatrix gen);

    // F4-linear code from a k x n symbol generator matrix; expands to 2k
    // binary rows phi(v_i), phi(w*v_i).
    static AdditiveCode from_f4(const std::vector<F4Vector>& rows);

    std::size_t n() const { return n_; }
    std::size_t r() const { return r_; }
    const BinMatrix& generator() const { return gen_; }

    // "6" when r is even, "6.5"-style otherwise.
    std::string k_string() const;

    WeightDistribution weight_distribution(std::size_t limit = kDefaultEnumLimit) const;
    std::size_t min_distance(std::size_t limit = kDefaultEnumLimit) const;

    // min_distance by enumeration when r is within the limit, otherwise via
    // the dual-strength identity d = strength(dual) + 1.
    std::size_t min_distance_auto(std::size_t limit = kDefaultEnumLimit) const;

    // Largest t such that every t coordinate pairs of the generator matrix
    // span full rank 2t.
    std::size_t strength() const;

    // Dual under <u,v> = sum_i (a_i d_i + b_i c_i); dimension 2n - r.
    AdditiveCode symplectic_dual() const;
    bool is_symplectic_self_dual() const;

    // True iff every subset of codelines spans even binary dimension
    // (subsets scanned in increasing size; first odd witness reported).
    BBLinearityResult bb_linearity_test(std::size_t limit = kDefaultSubsetLimit) const;

    // Sufficient literal check: closure of the row space under the
    // coordinatewise multiplication by w.
    bool is_f4_linear_literal() const;

    // Concatenation with the binary [3,2,2] code: each pair (a,b) maps to
    // (a, b, a+b); yields a [3n, r, 2d] binary linear code.
    BinaryLinearCode concatenate_322() const;

    // Subcode with pair 00 at coord, coordinate deleted.
    AdditiveCode shorten(std::size_t coord) const;

    // Generator columns restricted to the given coordinate pairs.
    BinMatrix pair_submatrix(const std::vector<std::size_t>& coords) const;

    bool same_subspace(const AdditiveCode& other) const;

  private:
    std::size_t n_, r_;
    BinMatrix gen_;
};

class BinaryLinearCode {
  public:
    BinaryLinearCode(std::size_t n2, std::size_t dim, BinMatrix gen);

    std::size_t length() const { return n2_; }
    std::size_t dim() const { return dim_; }
    const BinMatrix& generator() const { return gen_; }

    std::vector<std::uint64_t> weight_distribution(std::size_t limit = kDefaultEnumLimit) const;
    std::size_t min_distance(std::size_t limit = kDefaultEnumLimit) const;

  private:
    std::size_t n2_, dim_;
    BinMatrix gen_;
};

// Minimum length of a linear [*, dim, d]_q code: sum_{i<dim} ceil(d / q^i).
std::uint64_t griesmer_bound(std::size_t dim, std::size_t d, std::size_t q);

}  // namespace adq
