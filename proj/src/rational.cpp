#include "partcmp/rational.hpp"

#include <stdexcept>

namespace partcmp {

int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational Rational::make(int128 num, int128 den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

double Rational::to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
}

Rational Rational::operator+(const Rational& other) const {
    return make(num * other.den + other.num * den, den * other.den);
}

}  // namespace partcmp
