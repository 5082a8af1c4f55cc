#include "adq/gf4.hpp"

#include <cctype>

#include "adq/errors.hpp"

namespace adq {

char F4Elem::to_char() const {
    constexpr char chars[4] = {'0', '1', 'w', 'W'};
    return chars[v_];
}

F4Elem F4Elem::from_char(char c) {
    switch (c) {
        case '0': return F4Elem(0);
        case '1': return F4Elem(1);
        case 'w': return F4Elem(2);
        case 'W': return F4Elem(3);
        default: throw parse_error("invalid GF(4) symbol '" + std::string(1, c) + "'");
    }
}

F4Vector F4Vector::from_string(const std::string& symbols) {
    std::vector<F4Elem> elems;
    elems.reserve(symbols.size());
    for (char c : symbols) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        elems.push_back(F4Elem::from_char(c));
    }
    return F4Vector(std::move(elems));
}

F4Vector F4Vector::operator+(const F4Vector& other) const {
    if (size() != other.size()) throw std::invalid_argument("F4Vector length mismatch");
    F4Vector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = elems_[i] + other.elems_[i];
    return r;
}

F4Vector F4Vector::scaled(F4Elem s) const {
    F4Vector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = elems_[i] * s;
    return r;
}

std::size_t F4Vector::weight() const {
    std::size_t w = 0;
    for (auto e : elems_)
        if (!e.is_zero()) ++w;
    return w;
}

bool F4Vector::operator<(const F4Vector& other) const {
    const std::size_t n = std::min(size(), other.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (elems_[i] != other.elems_[i]) return elems_[i] < other.elems_[i];
    }
    return size() < other.size();
}

std::string F4Vector::to_string() const {
    std::string s;
    s.reserve(size());
    for (auto e : elems_) s.push_back(e.to_char());
    return s;
}

BitVector f4_expand(const F4Vector& v) {
    BitVector b(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].hi_bit()) b.set(2 * i, true);
        if (v[i].lo_bit()) b.set(2 * i + 1, true);
    }
    return b;
}

F4Vector f4_compress(const BitVector& b) {
    if (b.size() % 2 != 0) throw std::invalid_argument("f4_compress requires even length");
    F4Vector v(b.size() / 2);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::uint8_t a = b.get(2 * i) ? 1 : 0;
        const std::uint8_t lo = b.get(2 * i + 1) ? 1 : 0;
        v[i] = F4Elem(std::uint8_t((a << 1) | lo));
    }
    return v;
}

}  // namespace adq
