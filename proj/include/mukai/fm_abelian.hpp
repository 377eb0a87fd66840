#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mukai/mukai_vector.hpp"
#include "mukai/surface.hpp"
#include "mukai/types.hpp"

namespace mukai {

// The classical Fourier-Mukai transform of an abelian surface (Poincare
// kernel on X x X-hat) acts on the Mukai lattice by
//   F_H: r + d c1(L) + a w  ->  a - d c1(L-hat) + r w.
// The composition with taking-dual, G = (D o F)[-2], acts by
//   G_H: (r, d, a) -> (a, d, r)
// since the even shift is invisible on Mukai vectors.

namespace detail {
inline void require_abelian(const Surface& s, const char* op) {
    if (s.kind != SurfaceKind::Abelian)
        throw std::domain_error(std::string(op) + ": unsupported surface kind k3 "
                                                  "(classical transform needs an abelian surface)");
}
}  // namespace detail

inline MukaiVector fm_abelian_H(const MukaiVector& v, const Surface& s) {
    detail::require_abelian(s, "fm_abelian_H");
    return {v.a, -v.d, v.r};
}

inline MukaiVector g_transform_H(const MukaiVector& v, const Surface& s) {
    detail::require_abelian(s, "g_transform_H");
    return {v.a, v.d, v.r};
}

// ---------------------------------------------------------------------------
// WIT/IT case classifier for v = r + c1(L) + a w
// ---------------------------------------------------------------------------

enum class Section2Case { IT0_F, WIT2_G, WIT1_F, Unknown };

inline const char* to_string(Section2Case c) {
    switch (c) {
        case Section2Case::IT0_F: return "IT0_F";
        case Section2Case::WIT2_G: return "WIT2_G";
        case Section2Case::WIT1_F: return "WIT1_F";
        default: return "Unknown";
    }
}

struct NamedCheck {
    std::string name;
    bool passed;
};

struct Section2Verdict {
    Section2Case kind = Section2Case::Unknown;
    std::optional<MukaiVector> image;  // absent for Unknown
    std::vector<NamedCheck> hypotheses;
};

// Trichotomy over a for a mu-stable sheaf of vector (r, 1, a), r >= 1:
//   a > <v^2>/2      IT_0 for F,   image (a, -1, r)
//   0 < a <= <v^2>/2 WIT_2 for G,  image (a,  1, r)
//   a < 0            WIT_1 for F,  image -F_H(v) = (-a, 1, -r)
//   a = 0            no statement applies.
// Only lattice-visible hypotheses are checked; mu-stability is recorded as
// an assumption.
inline Section2Verdict classify_section2(const MukaiVector& v, const Surface& s) {
    detail::require_abelian(s, "classify_section2");
    if (v.d != 1)
        throw std::domain_error("classify_section2: hypothesis d=1 violated, d = " + v.d.str());
    if (v.r < 1)
        throw std::domain_error("classify_section2: hypothesis r>=1 violated, r = " + v.r.str());
    Int sq = v_squared(v, s);
    if (sq < 0)
        throw std::domain_error("classify_section2: <v^2> = " + sq.str() +
                                " < 0, empty moduli space");

    Section2Verdict out;
    out.hypotheses.push_back({"d == 1", true});
    out.hypotheses.push_back({"r >= 1", true});
    out.hypotheses.push_back({"<v^2> >= 0", true});
    out.hypotheses.push_back({"E mu-stable (assumed, not verified)", true});

    if (2 * v.a > sq) {
        out.kind = Section2Case::IT0_F;
        out.image = MukaiVector{v.a, -1, v.r};
        out.hypotheses.push_back({"a > <v^2>/2", true});
    } else if (v.a > 0) {
        out.kind = Section2Case::WIT2_G;
        out.image = MukaiVector{v.a, 1, v.r};
        out.hypotheses.push_back({"0 < a <= <v^2>/2", true});
    } else if (v.a < 0) {
        out.kind = Section2Case::WIT1_F;
        out.image = MukaiVector{-v.a, 1, -v.r};
        out.hypotheses.push_back({"a < 0", true});
    } else {
        out.kind = Section2Case::Unknown;
        out.hypotheses.push_back({"a != 0", false});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Proof-internal cardinality bounds
// ---------------------------------------------------------------------------

struct ProofBounds {
    std::optional<Int> ext_bound;       // #{x : Ext^1(E, P_x-dual) != 0} <= <v^2>/(2a), a > 0
    std::optional<Int> sections_bound;  // sum of h^0(E tensor P_x) <= <v^2>/(-2a),   a < 0
};

// Bounds are cardinalities, so the rational bounds are reported as floors.
inline ProofBounds proof_bounds(const MukaiVector& v, const Surface& s) {
    if (v.d != 1)
        throw std::domain_error("proof_bounds: hypothesis d=1 violated, d = " + v.d.str());
    ProofBounds out;
    Int sq = v_squared(v, s);
    if (v.a > 0)
        out.ext_bound = floordiv(sq, 2 * v.a);
    else if (v.a < 0)
        out.sections_bound = floordiv(sq, -2 * v.a);
    return out;
}

}  // namespace mukai
