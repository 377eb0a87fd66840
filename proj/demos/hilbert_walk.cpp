// Walks a Hilbert-scheme class through the generalized Fourier-Mukai
// transform and a spherical reflection, printing every lattice step.
//
// The starting point is a K3 surface with (L^2) = 12 and the isotropic
// vector v0 = 2 - L + 3w; Y = M_L(v0) is a second K3 surface, and the walk
// lands on a Hilb^4 class on Y.

#include <iostream>

#include "mukai/mukai.hpp"

int main() {
    using namespace mukai;

    FmSetup su = make_setup(SurfaceKind::K3, 2, -1, 3);
    std::cout << "setup: v0 = " << pretty(su.v0()) << ", (L^2) = " << su.l_sq()
              << ", Bezout pair (d1, l) = (" << su.d1 << ", " << su.l << ")\n";

    MukaiVector v = from_chern(1, 1, 4, su.source);
    std::cout << "start: v = " << pretty(v) << "  (Hilb^" << *hilbert_index(v, su.source)
              << ", dim M = " << moduli_dim(v, su.source) << ")\n";

    TheoremVerdict verdict = theorem_map(su, v);
    std::cout << "transform case " << to_string(verdict.kind) << ": image "
              << pretty(*verdict.canonical_image) << "\n";

    MukaiVector mirror{1, 0, 1};  // v(O_Y), a spherical class
    MukaiVector reflected = reflection(*verdict.canonical_image, mirror, su.target);
    MukaiVector final_v = canonical_form(reflected, su.target).vec;
    std::cout << "reflect in " << pretty(mirror) << ": " << pretty(reflected)
              << ", canonically " << pretty(final_v) << "\n";

    std::cout << "end:   v = " << pretty(final_v) << "  (Hilb^"
              << *hilbert_index(final_v, su.target)
              << ", dim M = " << moduli_dim(final_v, su.target) << ")\n";
    return 0;
}
