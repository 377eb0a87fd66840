#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "mukai/fm_general.hpp"
#include "mukai/mukai_vector.hpp"
#include "mukai/surface.hpp"
#include "mukai/types.hpp"

namespace mukai {

// ---------------------------------------------------------------------------
// The one-parameter family behind the rank-1-degree examples
// ---------------------------------------------------------------------------

struct Example1Case {
    FmSetup setup;
    MukaiVector v;
    Int v_sq;  // always 2s
    Int p;     // <v, v0-dual>, always n
    TheoremVerdict verdict;
};

// Family data d0 = -(r0-1), k = s r0 - n, v = (1, 1, (r0^2-1)s - r0 n) for
// s > 0, s r0 > n > 0, gcd(r0, n) = 1, r0 >= 2. Then <v^2> = 2s,
// <v, v0-dual> = n > 0 and the transform alone gives the isomorphism.
inline Example1Case example1_family(SurfaceKind kind, const Int& r0, const Int& n, const Int& s) {
    if (r0 < 2)
        throw std::domain_error("example1_family: r0 must be >= 2, got " + r0.str());
    if (s <= 0)
        throw std::domain_error("example1_family: s must be positive, got " + s.str());
    if (n <= 0 || n >= s * r0)
        throw std::domain_error("example1_family: need s*r0 > n > 0, got n = " + n.str());
    if (gcd_int(r0, n) != 1)
        throw std::domain_error("example1_family: gcd(r0,n) = " + gcd_int(r0, n).str() + " != 1");

    Int d0 = -(r0 - 1);
    Int k = s * r0 - n;  // gcd(r0,k) = gcd(r0,n) = 1, still checked by make_setup
    Example1Case out{make_setup(kind, r0, d0, k),
                     MukaiVector{1, 1, (r0 * r0 - 1) * s - r0 * n},
                     0,
                     0,
                     {}};
    out.v_sq = v_squared(out.v, out.setup.source);
    out.p = pairing(out.v, out.setup.v0_dual(), out.setup.source);
    if (out.v_sq != 2 * s || out.p != n)
        throw std::logic_error("example1_family: invariant <v^2>=2s, <v,v0-dual>=n failed");
    out.verdict = theorem_map(out.setup, out.v);
    if (out.verdict.kind != TheoremCase::FM)
        throw std::logic_error("example1_family: expected the FM case");
    return out;
}

// ---------------------------------------------------------------------------
// The scripted K3 walk: Hilb^4 -> Hilb^4 through the transform and a
// spherical reflection
// ---------------------------------------------------------------------------

struct Example2Step {
    std::string op;
    std::string input;
    std::string output;

    bool operator==(const Example2Step& o) const {
        return op == o.op && input == o.input && output == o.output;
    }
};

struct Example2Trace {
    std::vector<Example2Step> steps;
};

// K3, (L^2) = 12, v0 = 2 - L + 3w. The pipeline sends the Hilb^4 vector
// 1 + L + 3w to 3 - L-hat + w-hat, then reflects in v(O_Y) = (1,0,1) back to
// a Hilb^4 vector on the partner surface.
inline Example2Trace example2_k3() {
    Example2Trace tr;
    FmSetup su = make_setup(SurfaceKind::K3, 2, -1, 3);
    tr.steps.push_back({"setup", "r0=2,d0=-1,k=3",
                        "d1=" + su.d1.str() + ",l=" + su.l.str() + ",l_sq=" + su.l_sq().str() +
                            ",v0=" + su.v0().str()});

    MukaiVector v{1, 1, 3};
    TheoremVerdict verdict = theorem_map(su, v);
    tr.steps.push_back({"theorem_map", v.str(),
                        std::string("case=") + to_string(verdict.kind) +
                            ",canonical=" + verdict.canonical_image->str()});

    MukaiVector mirror{1, 0, 1};  // v(O_Y)
    MukaiVector reflected = reflection(*verdict.canonical_image, mirror, su.target);
    tr.steps.push_back({"reflection", verdict.canonical_image->str(), reflected.str()});

    MukaiVector final_v = canonical_form(reflected, su.target).vec;
    tr.steps.push_back({"canonical_form", reflected.str(), final_v.str()});

    tr.steps.push_back({"hilbert_index_source", v.str(), hilbert_index(v, su.source)->str()});
    tr.steps.push_back(
        {"hilbert_index_target", final_v.str(), hilbert_index(final_v, su.target)->str()});
    tr.steps.push_back({"moduli_dim_source", v.str(), moduli_dim(v, su.source).str()});
    tr.steps.push_back({"moduli_dim_target", final_v.str(), moduli_dim(final_v, su.target).str()});
    return tr;
}

// ---------------------------------------------------------------------------
// Searches and enumerations
// ---------------------------------------------------------------------------

inline constexpr int kDefaultSearchCeiling = 50;

// All v = (r, d, a) with |components| <= bound, deg_{g1}(v) = 1, v primitive
// and <v^2> >= 0, as theorem verdicts sorted by (<v^2>, r, d, a).
inline std::vector<TheoremVerdict> search_theorem_applicable(
    const FmSetup& su, const Int& bound, const Int& ceiling = kDefaultSearchCeiling) {
    if (bound < 0)
        throw std::domain_error("search_theorem_applicable: bound must be non-negative");
    if (bound > ceiling)
        throw std::domain_error("search_theorem_applicable: bound " + bound.str() +
                                " exceeds the configured ceiling " + ceiling.str());

    std::vector<TheoremVerdict> out;
    // d r0 + r d0 = 1 pins (r, d) to a line; only a runs free.
    for (Int r = -bound; r <= bound; ++r) {
        for (Int d = -bound; d <= bound; ++d) {
            if (d * su.r0 + r * su.d0 != 1) continue;
            for (Int a = -bound; a <= bound; ++a) {
                MukaiVector v{r, d, a};
                if (!is_primitive(v)) continue;
                if (v_squared(v, su.source) < 0) continue;
                out.push_back(theorem_map(su, v));
            }
        }
    }
    std::sort(out.begin(), out.end(), [&su](const TheoremVerdict& x, const TheoremVerdict& y) {
        auto key = [&su](const TheoremVerdict& t) {
            return std::make_tuple(v_squared(t.input, su.source), t.input.r, t.input.d, t.input.a);
        };
        return key(x) < key(y);
    });
    return out;
}

// All valid setups with (L^2) = 2 r0 k: coprime factorizations paired with
// every d0 in [-d0_bound, d0_bound] of gcd(r0, d0) = 1. (d0 = 0 survives the
// gcd filter only for r0 = 1, the classical case.)
inline std::vector<FmSetup> enumerate_setups(SurfaceKind kind, const Int& l_sq,
                                             const Int& d0_bound) {
    if (l_sq <= 0 || l_sq % 2 != 0)
        throw std::domain_error("enumerate_setups: (L^2) must be a positive even integer, got " +
                                l_sq.str());
    std::vector<FmSetup> out;
    Int half = l_sq / 2;
    for (Int r0 = 1; r0 <= half; ++r0) {
        if (half % r0 != 0) continue;
        Int k = half / r0;
        if (gcd_int(r0, k) != 1) continue;
        for (Int d0 = -d0_bound; d0 <= d0_bound; ++d0) {
            if (gcd_int(r0, d0) != 1) continue;
            out.push_back(make_setup(kind, r0, d0, k));
        }
    }
    return out;
}

}  // namespace mukai
