#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mukai/int_matrix.hpp"
#include "mukai/mukai_vector.hpp"
#include "mukai/surface.hpp"
#include "mukai/types.hpp"

namespace mukai {

// ---------------------------------------------------------------------------
// Generalized Fourier-Mukai setup
// ---------------------------------------------------------------------------

// Moduli data for the generalized transform: (L^2) = 2 r0 k with
// gcd(r0, k) = 1, and the isotropic primitive vector
//   v0 = r0 + d0 c1(L) + d0^2 k w,   gcd(r0, d0) = 1.
// Y = M_L(v0) is again a surface of the same kind with (L-hat^2) = (L^2);
// the universal family induces an isometry of Mukai lattices pinned down by
// a pair (d1, l) with d1 (k d0) - l r0 = 1.
struct FmSetup {
    Int r0;
    Int d0;
    Int k;
    Int d1;
    Int l;
    Surface source;
    Surface target;

    MukaiVector v0() const { return {r0, d0, d0 * d0 * k}; }
    MukaiVector v0_dual() const { return {r0, -d0, d0 * d0 * k}; }
    const Int& l_sq() const { return source.l_sq; }
};

namespace detail {
inline void validate_setup_args(const Int& r0, const Int& d0, const Int& k) {
    if (r0 < 1) throw std::domain_error("make_setup: r0 must be positive, got " + r0.str());
    if (k < 1) throw std::domain_error("make_setup: k must be positive, got " + k.str());
    if (gcd_int(r0, k) != 1)
        throw std::domain_error("make_setup: gcd(r0,k) = " + gcd_int(r0, k).str() + " != 1");
    if (gcd_int(r0, d0) != 1)
        throw std::domain_error("make_setup: gcd(r0,d0) = " + gcd_int(r0, d0).str() + " != 1");
}
}  // namespace detail

// Canonical Bezout data: d1 is the unique solution of d1 k d0 = 1 (mod r0)
// in [0, r0), l = (d1 k d0 - 1)/r0. For r0 = 1 this degenerates to
// d1 = 0, l = -1 and the transform reduces to the classical one.
inline FmSetup make_setup(SurfaceKind kind, const Int& r0, const Int& d0, const Int& k) {
    detail::validate_setup_args(r0, d0, k);
    Int d1 = mod_inverse(k * d0, r0);
    Int l = (d1 * k * d0 - 1) / r0;
    Surface s(kind, 2 * r0 * k);
    return {r0, d0, k, d1, l, s, s};
}

// Same, with a caller-chosen d1. Admissible d1 are exactly those congruent to
// the canonical one mod r0; anything else is rejected, never corrected.
inline FmSetup make_setup_with_d1(SurfaceKind kind, const Int& r0, const Int& d0, const Int& k,
                                  const Int& d1) {
    detail::validate_setup_args(r0, d0, k);
    Int num = d1 * k * d0 - 1;
    if (floormod(num, r0) != 0)
        throw std::domain_error("make_setup: d1 = " + d1.str() +
                                " does not satisfy d1*k*d0 = 1 (mod r0)");
    Surface s(kind, 2 * r0 * k);
    return {r0, d0, k, d1, num / r0, s, s};
}

// ---------------------------------------------------------------------------
// The induced isometry of Mukai lattices
// ---------------------------------------------------------------------------

// Columns are the images of 1, c1(L), w:
//   F(1)     = d0^2 k + d0 l c1(L-hat) + l^2 r0 w
//   F(c1(L)) = 2 d0 k r0 + (2 d0 k d1 - 1) c1(L-hat) + (2 d0 k^2 d1^2 - 2 d1 k) w
//   F(w)     = r0 + d1 c1(L-hat) + d1^2 k w
// det = 1 for every valid setup.
inline IntMatrix3 fm_matrix(const FmSetup& su) {
    MukaiVector c0{su.d0 * su.d0 * su.k, su.d0 * su.l, su.l * su.l * su.r0};
    MukaiVector c1{2 * su.d0 * su.k * su.r0, 2 * su.d0 * su.k * su.d1 - 1,
                   2 * su.d0 * su.k * su.k * su.d1 * su.d1 - 2 * su.d1 * su.k};
    MukaiVector c2{su.r0, su.d1, su.d1 * su.d1 * su.k};
    return IntMatrix3::from_columns(c0, c1, c2);
}

inline MukaiVector fm_apply(const FmSetup& su, const MukaiVector& v) {
    return fm_matrix(su).apply(v);
}

// Exact integral inverse (det = 1).
inline MukaiVector fm_inverse_apply(const FmSetup& su, const MukaiVector& w) {
    return fm_matrix(su).inverse_unimodular().apply(w);
}

// ---------------------------------------------------------------------------
// Relative-degree reference vectors and the degree identity
// ---------------------------------------------------------------------------

// g1 = v0-dual (the restriction of the kernel to X x {t}, dualized) and
// g2 = F(w) (its restriction to {s} x Y). deg_{g1}(v) = d r0 + r d0 on the
// source; deg_{g2}(v') = d' r0 - d1 r' on the target.
inline std::pair<MukaiVector, MukaiVector> g_vectors(const FmSetup& su) {
    return {su.v0_dual(), MukaiVector{su.r0, su.d1, su.d1 * su.d1 * su.k}};
}

struct DegIdentity {
    Int lhs;  // deg_{g1}(v)
    Int rhs;  // -deg_{g2}(F(v)) = deg_{g2-dual}(F(v)-dual)
};

// deg_{G1}(v) = -deg_{G2}(F(v)); at the coordinate level
// r' d1 - d' r0 = d r0 + r d0.
inline DegIdentity lemma_deg_identity(const FmSetup& su, const MukaiVector& v) {
    auto [g1, g2] = g_vectors(su);
    Int lhs = deg_rel(v, g1);
    MukaiVector fv = fm_apply(su, v);
    Int rhs = -deg_rel(fv, g2);
    Int third = deg_rel(dual(fv), dual(g2));
    if (third != rhs)
        throw std::logic_error("lemma_deg_identity: dual-side expression diverged");
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// The moduli-isomorphism decision procedure
// ---------------------------------------------------------------------------

enum class TheoremCase { DualThenFM, FM, Appendix, Inapplicable };

inline const char* to_string(TheoremCase c) {
    switch (c) {
        case TheoremCase::DualThenFM: return "DualThenFM";
        case TheoremCase::FM: return "FM";
        case TheoremCase::Appendix: return "Appendix";
        default: return "Inapplicable";
    }
}

struct TheoremVerdict {
    TheoremCase kind = TheoremCase::Inapplicable;
    MukaiVector input;
    std::optional<MukaiVector> raw_image;
    std::optional<MukaiVector> canonical_image;
    Int pairing_with_v0dual;
    std::vector<std::string> assumptions;  // sheaf-level hypotheses, never verified
};

// For primitive v with deg_{g1}(v) = 1 (i.e. d r0 + r d0 = 1) and
// <v^2> >= 0, decide which composition gives an isomorphism of moduli
// spaces, keyed on p = <v, v0-dual>:
//   p < 0: taking-dual after the transform,  image F(v)-dual
//   p > 0: the transform alone,              image -F(v)
//   p = 0: no statement applies.
inline TheoremVerdict theorem_map(const FmSetup& su, const MukaiVector& v) {
    Int degree = deg_rel(v, su.v0_dual());
    if (degree != 1)
        throw std::domain_error("theorem_map: deg_G1(v)=" + degree.str() + " != 1");
    if (!is_primitive(v))
        throw std::domain_error("theorem_map: imprimitive vector " + v.str());
    Int sq = v_squared(v, su.source);
    if (sq < 0)
        throw std::domain_error("theorem_map: <v^2> = " + sq.str() + " < 0, empty moduli space");

    TheoremVerdict out;
    out.input = v;
    out.pairing_with_v0dual = pairing(v, su.v0_dual(), su.source);
    out.assumptions = {"universal family is locally free (standing assumption)",
                       "input sheaf is mu-stable with respect to L (not verified)"};
    if (out.pairing_with_v0dual < 0) {
        out.kind = TheoremCase::DualThenFM;
        out.raw_image = dual(fm_apply(su, v));
    } else if (out.pairing_with_v0dual > 0) {
        out.kind = TheoremCase::FM;
        out.raw_image = -fm_apply(su, v);
    } else {
        out.kind = TheoremCase::Inapplicable;
        return out;
    }
    out.canonical_image = canonical_form(*out.raw_image, su.target).vec;
    return out;
}

// deg_{g1}(v) = 0 regime: the transform sends a mu-stable locally free E
// outside M_L(v0-perp) to a mu-stable locally free sheaf of vector -F(v).
// The exclusion and the stability hypotheses are sheaf-level; they are
// recorded, not checked.
inline TheoremVerdict classify_appendix(const FmSetup& su, const MukaiVector& v) {
    Int degree = deg_rel(v, su.v0_dual());
    if (degree != 0)
        throw std::domain_error("classify_appendix: deg_G1(v)=" + degree.str() + " != 0");

    TheoremVerdict out;
    out.kind = TheoremCase::Appendix;
    out.input = v;
    out.pairing_with_v0dual = pairing(v, su.v0_dual(), su.source);
    out.raw_image = -fm_apply(su, v);
    if (!out.raw_image->is_zero())
        out.canonical_image = canonical_form(*out.raw_image, su.target).vec;
    out.assumptions = {"universal family is locally free (standing assumption)",
                       "E is mu-stable and locally free (not verified)",
                       "E not in M_L(v0-perp) (excluded locus, not verified)"};
    return out;
}

// ---------------------------------------------------------------------------
// Spherical reflection
// ---------------------------------------------------------------------------

// R_u(v) = v + <v,u> u for <u^2> = -2; an involutive isometry with
// R_u(u) = -u.
inline MukaiVector reflection(const MukaiVector& v, const MukaiVector& u, const Surface& s) {
    Int usq = v_squared(u, s);
    if (usq != -2)
        throw std::domain_error("reflection: non-spherical mirror, <u^2> = " + usq.str());
    return v + pairing(v, u, s) * u;
}

}  // namespace mukai
