#pragma once

#include <cstdint>
#include <vector>

#include "adq/bitvec.hpp"
#include "adq/code.hpp"
#include "adq/gf4.hpp"

namespace adq {

// A projective subspace of rank at most 2 in the binary space V_m: the empty
// object (rank 0), a point (rank 1), or a line (rank 2). Lines are stored by
// the two lexicographically smallest of their three nonzero vectors, points
// by their vector, so equality is structural.
class CodeObject {
  public:
    // Canonicalizes the span of the given generators (either may be zero or
    // they may be dependent; rank is derived).
    CodeObject(std::size_t ambient, const BitVector& g1, const BitVector& g2);
    CodeObject(std::size_t ambient, const BitVector& point);
    explicit CodeObject(std::size_t ambient);  // rank 0

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return rank_; }
    const BitVector& gen(std::size_t i) const { return gens_[i]; }

    // The 1, 1, or 3 nonzero vectors of the object.
    std::vector<BitVector> points() const;

    // True if every generator lies in the hyperplane with normal h.
    bool contained_in_hyperplane(const BitVector& h) const;

    bool operator==(const CodeObject& other) const;
    bool operator<(const CodeObject& other) const;  // (rank, gens) lexicographic

  private:
    std::size_t ambient_;
    std::size_t rank_;
    BitVector gens_[2];
};

// Ordered multiset of code objects in a common ambient dimension.
struct ObjectFamily {
    std::size_t ambient = 0;
    std::vector<CodeObject> objects;

    std::size_t size() const { return objects.size(); }
};

// All lines of V_m (= PG(m-1,2)), each once, canonical, in strictly
// increasing order; count = (2^m - 1)(2^m - 2)/6.
std::vector<CodeObject> enumerate_lines(std::size_t m);

// Object i = span of generator columns 2i, 2i+1, in ambient dimension r.
ObjectFamily family_from_code(const AdditiveCode& c);

// A code whose coordinate-pair column spans reproduce the family (canonical
// basis per object). Requires the family to span its ambient space.
AdditiveCode code_from_family(const ObjectFamily& f);

// Object i = F2-span of {expand(c_i), expand(w * c_i)} for column c_i of the
// k x n symbol matrix; columns must be nonzero.
ObjectFamily lines_of_linear_code(const std::vector<F4Vector>& rows);

// True iff the joint span has dimension equal to the sum of the ranks.
bool general_position(const std::vector<CodeObject>& objs);

// Largest t such that every t-subset is in general position; 0 by convention
// when the family contains a rank-0 object.
std::size_t family_strength(const ObjectFamily& f);

// Minimum over hyperplanes H of the number of objects not contained in H;
// equals the minimum distance of the corresponding code.
std::size_t hyperplane_deficiency(const ObjectFamily& f,
                                  std::size_t limit = kDefaultEnumLimit);

}  // namespace adq
