#include "adq/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "adq/errors.hpp"
#include "combinations.hpp"

namespace adq {

CodeObject::CodeObject(std::size_t ambient) : ambient_(ambient), rank_(0) {
    gens_[0] = BitVector(ambient);
    gens_[1] = BitVector(ambient);
}

CodeObject::CodeObject(std::size_t ambient, const BitVector& point) : ambient_(ambient) {
    if (point.size() != ambient) throw std::invalid_argument("generator/ambient mismatch");
    gens_[0] = point;
    gens_[1] = BitVector(ambient);
    rank_ = point.is_zero() ? 0 : 1;
}

CodeObject::CodeObject(std::size_t ambient, const BitVector& g1, const BitVector& g2)
    : ambient_(ambient) {
    if (g1.size() != ambient || g2.size() != ambient)
        throw std::invalid_argument("generator/ambient mismatch");
    gens_[0] = BitVector(ambient);
    gens_[1] = BitVector(ambient);
    if (g1.is_zero() && g2.is_zero()) {
        rank_ = 0;
    } else if (g1.is_zero() || g2.is_zero() || g1 == g2) {
        rank_ = 1;
        gens_[0] = g1.is_zero() ? g2 : g1;
    } else {
        rank_ = 2;
        BitVector third = g1 ^ g2;
        std::vector<BitVector> pts{g1, g2, third};
        std::sort(pts.begin(), pts.end());
        gens_[0] = pts[0];
        gens_[1] = pts[1];
    }
}

std::vector<BitVector> CodeObject::points() const {
    switch (rank_) {
        case 0: return {};
        case 1: return {gens_[0]};
        default: return {gens_[0], gens_[1], gens_[0] ^ gens_[1]};
    }
}

bool CodeObject::contained_in_hyperplane(const BitVector& h) const {
    for (std::size_t i = 0; i < rank_; ++i)
        if (gens_[i].dot(h)) return false;
    return true;
}

bool CodeObject::operator==(const CodeObject& other) const {
    return ambient_ == other.ambient_ && rank_ == other.rank_ && gens_[0] == other.gens_[0] &&
           gens_[1] == other.gens_[1];
}

bool CodeObject::operator<(const CodeObject& other) const {
    if (rank_ != other.rank_) return rank_ < other.rank_;
    if (gens_[0] != other.gens_[0]) return gens_[0] < other.gens_[0];
    return gens_[1] < other.gens_[1];
}

std::vector<CodeObject> enumerate_lines(std::size_t m) {
    if (m < 2) throw std::invalid_argument("enumerate_lines requires dimension >= 2");
    if (m > 63) throw limit_error("enumerate_lines supports dimension <= 63");

    // All nonzero vectors in lexicographic order of their bit strings.
    std::vector<BitVector> vecs;
    vecs.reserve((std::size_t(1) << m) - 1);
    for (std::uint64_t x = 1; x < (std::uint64_t(1) << m); ++x) {
        BitVector v(m);
        for (std::size_t i = 0; i < m; ++i)
            if ((x >> i) & 1) v.set(i, true);
        vecs.push_back(std::move(v));
    }
    std::sort(vecs.begin(), vecs.end());

    std::vector<CodeObject> lines;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        for (std::size_t j = i + 1; j < vecs.size(); ++j) {
            // Canonical iff {v_i, v_j} are the two smallest on the line.
            const BitVector third = vecs[i] ^ vecs[j];
            if (vecs[j] < third) lines.emplace_back(m, vecs[i], vecs[j]);
        }
    }
    return lines;
}

ObjectFamily family_from_code(const AdditiveCode& c) {
    ObjectFamily f;
    f.ambient = c.r();
    f.objects.reserve(c.n());
    for (std::size_t i = 0; i < c.n(); ++i) {
        f.objects.emplace_back(c.r(), c.generator().column(2 * i),
                               c.generator().column(2 * i + 1));
    }
    return f;
}

AdditiveCode code_from_family(const ObjectFamily& f) {
    const std::size_t m = f.ambient;
    BinMatrix gen(m, 2 * f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const CodeObject& o = f.objects[i];
        for (std::size_t g = 0; g < 2; ++g) {
            if (g >= o.rank()) continue;
            for (std::size_t row = 0; row < m; ++row)
                if (o.gen(g).get(row)) gen.set(row, 2 * i + g, true);
        }
    }
    // Construction rejects families that do not span the ambient space.
    return AdditiveCode(f.size(), m, std::move(gen));
}

ObjectFamily lines_of_linear_code(const std::vector<F4Vector>& rows) {
    if (rows.empty()) throw std::invalid_argument("empty generator");
    const std::size_t k = rows.size();
    const std::size_t n = rows[0].size();
    ObjectFamily f;
    f.ambient = 2 * k;
    for (std::size_t j = 0; j < n; ++j) {
        F4Vector col(k);
        for (std::size_t i = 0; i < k; ++i) col[i] = rows[i][j];
        if (col.weight() == 0) throw std::invalid_argument("zero column in generator");
        f.objects.emplace_back(2 * k, f4_expand(col), f4_expand(col.scaled(F4Elem::omega())));
    }
    return f;
}

bool general_position(const std::vector<CodeObject>& objs) {
    std::size_t rank_sum = 0;
    for (const auto& o : objs) rank_sum += o.rank();
    if (objs.empty()) return true;

    if (objs[0].ambient() <= 64) {
        WordBasis basis;
        for (const auto& o : objs)
            for (std::size_t g = 0; g < o.rank(); ++g) basis.insert(o.gen(g).word0());
        return basis.dim() == rank_sum;
    }
    BinMatrix m(0, objs[0].ambient());
    for (const auto& o : objs)
        for (std::size_t g = 0; g < o.rank(); ++g) m.append_row(o.gen(g));
    return rank(m) == rank_sum;
}

std::size_t family_strength(const ObjectFamily& f) {
    for (const auto& o : f.objects)
        if (o.rank() == 0) return 0;

    const std::size_t n = f.size();
    for (std::size_t t = 1; t <= n; ++t) {
        auto subset = detail::first_combination(t);
        do {
            std::vector<CodeObject> objs;
            objs.reserve(t);
            for (auto i : subset) objs.push_back(f.objects[i]);
            if (!general_position(objs)) return t - 1;
        } while (detail::next_combination(subset, n));
    }
    return n;
}

std::size_t hyperplane_deficiency(const ObjectFamily& f, std::size_t limit) {
    const std::size_t m = f.ambient;
    if (m > limit || m > 63)
        throw limit_error("hyperplane scan refused: ambient dimension " + std::to_string(m) +
                          " exceeds limit " + std::to_string(std::min<std::size_t>(limit, 63)));
    // Objects as packed generator words; m <= limit <= 64.
    struct ObjWords {
        std::uint64_t g[2];
        std::size_t rank;
    };
    std::vector<ObjWords> objs;
    objs.reserve(f.size());
    for (const auto& o : f.objects) {
        ObjWords w{{0, 0}, o.rank()};
        for (std::size_t g = 0; g < o.rank(); ++g) w.g[g] = o.gen(g).word0();
        objs.push_back(w);
    }

    std::size_t best = f.size();
    // Hyperplanes scanned as all nonzero dual vectors, in a fixed order.
    for (std::uint64_t h = 1; h < (std::uint64_t(1) << m); ++h) {
        std::size_t outside = 0;
        for (const auto& o : objs) {
            bool inside = true;
            for (std::size_t g = 0; g < o.rank; ++g)
                if (std::popcount(o.g[g] & h) & 1u) {
                    inside = false;
                    break;
                }
            if (!inside) ++outside;
        }
        best = std::min(best, outside);
        if (best == 0) break;
    }
    return best;
}

}  // namespace adq
