#pragma once

#include <cstdint>

namespace partcmp {

using int128 = __int128;

int128 gcd128(int128 a, int128 b);

/// Exact rational on 128-bit integers. Wide enough for products of pair
/// totals (values up to ~5e11 each) at object counts of a few million.
/// Always stored normalized: gcd(num, den) = 1, den > 0.
struct Rational {
    int128 num = 0;
    int128 den = 1;

    static Rational make(int128 num, int128 den);

    double to_double() const;
    bool is_one() const { return num == den; }

    Rational operator+(const Rational& other) const;
    bool operator==(const Rational& other) const { return num == other.num && den == other.den; }
};

}  // namespace partcmp
