#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "sumprod/errors.hpp"
#include "sumprod/int128.hpp"

namespace sumprod {

// Exact rational on 128-bit integers. Always reduced, denominator positive.
// Desk-scale arithmetic: operands stay well below 2^127 for every quantity
// this library produces (counts <= p^3 with p < 2^31).
struct Rat {
    i128 num = 0;
    i128 den = 1;

    Rat() = default;
    Rat(i128 n) : num(n), den(1) {}
    Rat(i128 n, i128 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw Error("rational division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    double to_double() const { return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den)); }

    std::string str() const { return to_string(num) + "/" + to_string(den); }

    // Exact value of a finite double (every double is a dyadic rational).
    static Rat from_double_exact(double x) {
        if (!std::isfinite(x)) throw Error("non-finite threshold");
        if (x == 0.0) return Rat(0);
        int e = 0;
        double m = std::frexp(x, &e);  // x = m * 2^e, |m| in [0.5, 1)
        i128 mant = static_cast<i128>(std::ldexp(m, 53));
        e -= 53;
        if (e > 70 || e < -120) throw Error("value out of range for exact rational conversion");
        if (e >= 0) return Rat(mant * (i128(1) << e));
        return Rat(mant, i128(1) << (-e));
    }
};

}  // namespace sumprod
