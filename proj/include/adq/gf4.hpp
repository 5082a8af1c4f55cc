#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adq/bitvec.hpp"

namespace adq {

// GF(4) element encoded as the bit pair (a,b) with value a*w + b, where w is
// a root of x^2 + x + 1. Encoding: (0,0)=0, (0,1)=1, (1,0)=w, (1,1)=w^2.
// Display alphabet: 0 1 w W, with W = w^2 = w + 1.
class F4Elem {
  public:
    constexpr F4Elem() = default;
    constexpr explicit F4Elem(std::uint8_t value) : v_(value & 3) {}
    static constexpr F4Elem zero() { return F4Elem(0); }
    static constexpr F4Elem one() { return F4Elem(1); }
    static constexpr F4Elem omega() { return F4Elem(2); }
    static constexpr F4Elem omega_bar() { return F4Elem(3); }

    constexpr std::uint8_t value() const { return v_; }
    constexpr bool hi_bit() const { return (v_ >> 1) & 1; }  // the a component
    constexpr bool lo_bit() const { return v_ & 1; }         // the b component
    constexpr bool is_zero() const { return v_ == 0; }

    // Frobenius conjugate x -> x^2 (swaps w and W).
    constexpr F4Elem conj() const { return v_ >= 2 ? F4Elem(std::uint8_t(v_ ^ 1)) : *this; }

    friend constexpr F4Elem operator+(F4Elem x, F4Elem y) {
        return F4Elem(std::uint8_t(x.v_ ^ y.v_));
    }
    friend constexpr F4Elem operator*(F4Elem x, F4Elem y) {
        // log/antilog-free: table is small enough to spell out
        constexpr std::uint8_t table[4][4] = {
            {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
        return F4Elem(table[x.v_][y.v_]);
    }
    friend constexpr bool operator==(F4Elem x, F4Elem y) { return x.v_ == y.v_; }
    friend constexpr bool operator!=(F4Elem x, F4Elem y) { return x.v_ != y.v_; }
    friend constexpr bool operator<(F4Elem x, F4Elem y) { return x.v_ < y.v_; }

    char to_char() const;
    static F4Elem from_char(char c);

  private:
    std::uint8_t v_ = 0;
};

constexpr F4Elem f4_mul(F4Elem x, F4Elem y) { return x * y; }
constexpr F4Elem f4_add(F4Elem x, F4Elem y) { return x + y; }

// Vector over GF(4).
class F4Vector {
  public:
    F4Vector() = default;
    explicit F4Vector(std::size_t len) : elems_(len) {}
    explicit F4Vector(std::vector<F4Elem> elems) : elems_(std::move(elems)) {}

    // Parses a symbol string over {0,1,w,W}; whitespace is skipped.
    static F4Vector from_string(const std::string& symbols);

    std::size_t size() const { return elems_.size(); }
    F4Elem operator[](std::size_t i) const { return elems_[i]; }
    F4Elem& operator[](std::size_t i) { return elems_[i]; }

    F4Vector operator+(const F4Vector& other) const;
    F4Vector scaled(F4Elem s) const;

    std::size_t weight() const;  // nonzero symbol count

    bool operator==(const F4Vector& other) const { return elems_ == other.elems_; }
    bool operator<(const F4Vector& other) const;

    std::string to_string() const;

  private:
    std::vector<F4Elem> elems_;
};

// Symbol i maps to bits (2i, 2i+1) = (a, b). Mutually inverse with
// f4_compress, which requires an even-length input.
BitVector f4_expand(const F4Vector& v);
F4Vector f4_compress(const BitVector& b);

}  // namespace adq
