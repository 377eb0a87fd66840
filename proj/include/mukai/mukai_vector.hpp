#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mukai/surface.hpp"
#include "mukai/types.hpp"

namespace mukai {

// A Mukai vector r + d*c1(L) + a*w on a Picard-rank-1 surface, stored as the
// integer triple (r, d, a) in the basis (1, c1(L), w).
struct MukaiVector {
    Int r;
    Int d;
    Int a;

    MukaiVector() : r(0), d(0), a(0) {}
    MukaiVector(Int r_, Int d_, Int a_) : r(std::move(r_)), d(std::move(d_)), a(std::move(a_)) {}

    bool operator==(const MukaiVector& o) const { return r == o.r && d == o.d && a == o.a; }
    bool operator!=(const MukaiVector& o) const { return !(*this == o); }

    MukaiVector operator+(const MukaiVector& o) const { return {r + o.r, d + o.d, a + o.a}; }
    MukaiVector operator-(const MukaiVector& o) const { return {r - o.r, d - o.d, a - o.a}; }
    MukaiVector operator-() const { return {-r, -d, -a}; }

    bool is_zero() const { return r == 0 && d == 0 && a == 0; }

    // "r,d,a" — the stable text form used by every interface.
    std::string str() const { return r.str() + "," + d.str() + "," + a.str(); }
};

inline MukaiVector operator*(const Int& c, const MukaiVector& v) {
    return {c * v.r, c * v.d, c * v.a};
}

inline std::ostream& operator<<(std::ostream& os, const MukaiVector& v) { return os << v.str(); }

// Paper-style rendering, e.g. (2,-1,3) -> "2 - L + 3w".
inline std::string pretty(const MukaiVector& v) {
    std::string out;
    auto term = [&out](const Int& c, const char* sym) {
        if (c == 0) return;
        if (out.empty()) {
            if (c == -1 && *sym) out += "-";
            else if (c != 1 || !*sym) out += c.str();
        } else {
            out += (c < 0) ? " - " : " + ";
            Int m = abs_int(c);
            if (m != 1 || !*sym) out += m.str();
        }
        out += sym;
    };
    term(v.r, "");
    term(v.d, "L");
    term(v.a, "w");
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// The Mukai pairing and its isometries
// ---------------------------------------------------------------------------

// <v,w> = d d' (L^2) - r a' - a r'. The form does not depend on the surface
// kind, only on (L^2).
inline Int pairing(const MukaiVector& v, const MukaiVector& w, const Surface& s) {
    return v.d * w.d * s.l_sq - v.r * w.a - v.a * w.r;
}

// <v^2> = d^2 (L^2) - 2 r a.
inline Int v_squared(const MukaiVector& v, const Surface& s) {
    return v.d * v.d * s.l_sq - 2 * v.r * v.a;
}

// Cohomological taking-dual: (r, d, a) -> (r, -d, a). An involutive isometry.
inline MukaiVector dual(const MukaiVector& v) { return {v.r, -v.d, v.a}; }

// Multiplication by ch(L^m) = 1 + m c1(L) + m^2 (L^2)/2 w:
//   (r, d, a) -> (r, d + r m, a + m d (L^2) + r m^2 (L^2)/2).
// (L^2) even keeps everything integral. twist(.,m) o twist(.,m') = twist(.,m+m').
inline MukaiVector twist(const MukaiVector& v, const Int& m, const Surface& s) {
    Int half = s.l_sq / 2;
    return {v.r, v.d + v.r * m, v.a + m * v.d * s.l_sq + v.r * m * m * half};
}

// ---------------------------------------------------------------------------
// Chern data
// ---------------------------------------------------------------------------

struct ChernData {
    Int rank;
    Int c1_coeff;  // c1 = c1_coeff * c1(L)
    Int c2;
};

// v(x) = ch(x)(1 + eps*w): a = c1^2 (L^2)/2 - c2 + eps * rank.
inline MukaiVector from_chern(const Int& rank, const Int& c1_coeff, const Int& c2,
                              const Surface& s) {
    Int half = s.l_sq / 2;
    return {rank, c1_coeff, c1_coeff * c1_coeff * half - c2 + s.epsilon() * rank};
}

// Exact inverse of from_chern.
inline ChernData to_chern(const MukaiVector& v, const Surface& s) {
    Int half = s.l_sq / 2;
    return {v.r, v.d, v.d * v.d * half - v.a + s.epsilon() * v.r};
}

// ---------------------------------------------------------------------------
// Relative degree with respect to a reference vector (the lattice shadow of
// deg_G(E) = deg(E tensor G-dual))
// ---------------------------------------------------------------------------

// deg_G(v) = d r_G - d_G r; depends on g only through (r_G, d_G).
inline Int deg_rel(const MukaiVector& v, const MukaiVector& g) {
    return v.d * g.r - g.d * v.r;
}

inline Int rk_rel(const MukaiVector& v, const MukaiVector& g) { return v.r * g.r; }

// mu_G(v) = deg_G(v) / rk_G(v), an exact rational. Degenerate for rank 0.
inline Rational mu_rel(const MukaiVector& v, const MukaiVector& g) {
    if (v.r == 0 || g.r == 0)
        throw std::domain_error("mu_rel: degenerate slope, zero rank (r=" + v.r.str() +
                                ", r_G=" + g.r.str() + ")");
    return Rational(deg_rel(v, g)) / Rational(rk_rel(v, g));
}

// ---------------------------------------------------------------------------
// Predicates and moduli invariants
// ---------------------------------------------------------------------------

// gcd(|r|,|d|,|a|) = 1; the zero vector (gcd 0) is not primitive.
inline bool is_primitive(const MukaiVector& v) { return gcd3(v.r, v.d, v.a) == 1; }

inline bool is_isotropic(const MukaiVector& v, const Surface& s) {
    return v_squared(v, s) == 0;
}

// dim M_L(v) = <v^2> + 2 for primitive v with <v^2> >= 0.
inline Int moduli_dim(const MukaiVector& v, const Surface& s) {
    Int sq = v_squared(v, s);
    if (sq < 0)
        throw std::domain_error("moduli_dim: <v^2> = " + sq.str() + " < 0, empty moduli space");
    if (!is_primitive(v))
        throw std::domain_error("moduli_dim: imprimitive vector " + v.str());
    return sq + 2;
}

// ---------------------------------------------------------------------------
// Canonical representative under twist and global sign
// ---------------------------------------------------------------------------

struct CanonicalForm {
    MukaiVector vec;  // the representative: vec = twist(sign * v, m)
    Int m;            // twist exponent applied
    int sign;         // +1 or -1
};

namespace detail {

// Twist exponent that puts x into the balanced residue range (-M/2, M/2]
// modulo M > 0, together with the reduced value.
inline Int balanced_residue(const Int& x, const Int& modulus) {
    Int t = floormod(x, modulus);
    if (2 * t > modulus) t -= modulus;
    return t;
}

// Rank-1 vectors: every d is reachable, so the balanced-d rule is vacuous.
// Pick the twist minimizing |a| instead; break ties toward positive a, then
// positive d. This is the normalization that presents rank-1 targets the way
// they are usually written (1 + L + 3w rather than 1 - 3w).
inline Int rank_one_min_a_twist(const MukaiVector& v, const Surface& s) {
    const Int& L = s.l_sq;
    Int half = L / 2;
    // a(m) = half*m^2 + d*L*m + a; the vertex sits at the integer m = -d.
    std::vector<Int> candidates{-v.d};
    Int disc = v.d * v.d * L * L - 2 * L * v.a;
    if (disc >= 0) {
        Int root = boost::multiprecision::sqrt(disc);  // floor sqrt
        for (const Int& num : {Int(-v.d * L - root), Int(-v.d * L + root)}) {
            Int q = floordiv(num, L);
            candidates.push_back(q - 1);
            candidates.push_back(q);
            candidates.push_back(q + 1);
        }
    }
    Int best_m = candidates.front();
    MukaiVector best = twist(v, best_m, s);
    for (const Int& m : candidates) {
        MukaiVector w = twist(v, m, s);
        Int wa = abs_int(w.a), ba = abs_int(best.a);
        bool better = wa < ba;
        if (!better && wa == ba) {
            if ((w.a > 0) != (best.a > 0)) better = w.a > 0;
            else better = w.d > best.d;  // tied |a| values sit at d and -d
        }
        if (better) { best_m = m; best = w; }
    }
    return best_m;
}

}  // namespace detail

// Orbit representative under twist and global sign. The sign makes the first
// nonzero component of (r, d, a) positive. For |r| >= 2 the twist reduces d
// into (-|r|/2, |r|/2]; for |r| = 1 see rank_one_min_a_twist; for r = 0,
// d != 0 the twist reduces a into the balanced range mod |d|(L^2). Two
// vectors are twist-sign-equivalent iff their representatives agree.
inline CanonicalForm canonical_form(const MukaiVector& v, const Surface& s) {
    if (v.is_zero()) throw std::domain_error("canonical_form: zero vector");
    int sign = 1;
    const Int& lead = (v.r != 0) ? v.r : (v.d != 0 ? v.d : v.a);
    if (lead < 0) sign = -1;
    MukaiVector w = sign == 1 ? v : -v;

    Int m = 0;
    if (w.r > 1) {
        m = (detail::balanced_residue(w.d, w.r) - w.d) / w.r;
    } else if (w.r == 1) {
        m = detail::rank_one_min_a_twist(w, s);
    } else if (w.d != 0) {
        Int step = w.d * s.l_sq;
        m = (detail::balanced_residue(w.a, abs_int(step)) - w.a) / step;
    }
    return {twist(w, m, s), m, sign};
}

// ---------------------------------------------------------------------------
// Hilbert-scheme index
// ---------------------------------------------------------------------------

// A rank-(+-1) vector twist-normalizes to (1, 0, a0); it is the class of
// Hilb^n for n = eps - a0 when that is non-negative. Everything else has no
// Hilbert index.
inline std::optional<Int> hilbert_index(const MukaiVector& v, const Surface& s) {
    if (v.r != 1 && v.r != -1) return std::nullopt;
    MukaiVector w = v.r < 0 ? -v : v;
    Int a0 = w.a - w.d * w.d * (s.l_sq / 2);  // = twist(w, -d).a
    Int n = s.epsilon() - a0;
    if (n < 0) return std::nullopt;
    return n;
}

}  // namespace mukai
