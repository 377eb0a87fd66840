#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mukai {

// All lattice arithmetic is exact. Components grow quartically in the
// setup parameters during sweeps, so a fixed-width integer is not an option.
using Int = boost::multiprecision::cpp_int;

// Slopes are the only non-integer quantities in the toolkit.
using Rational = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

inline Int gcd3(const Int& a, const Int& b, const Int& c) {
    return gcd_int(gcd_int(a, b), c);
}

// Floor division and the matching non-negative remainder. C++ '/' truncates
// toward zero, which is the wrong convention for residue normalization.
inline Int floordiv(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("floordiv: division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floormod(const Int& a, const Int& b) {
    return a - floordiv(a, b) * b;
}

struct Bezout {
    Int g;  // gcd(a, b) >= 0
    Int x;  // a*x + b*y = g
    Int y;
};

// Iterative extended Euclidean algorithm; accepts arbitrary signs.
inline Bezout extended_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

// Inverse of a modulo m, in [0, m). Requires gcd(a, m) = 1 and m >= 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    if (m < 1) throw std::domain_error("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    Bezout e = extended_gcd(floormod(a, m), m);
    if (e.g != 1)
        throw std::domain_error("mod_inverse: argument not invertible, gcd = " + e.g.str());
    return floormod(e.x, m);
}

}  // namespace mukai
