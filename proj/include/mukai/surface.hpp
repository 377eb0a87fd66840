#pragma once

#include <stdexcept>
#include <string>

#include "mukai/types.hpp"

namespace mukai {

enum class SurfaceKind { Abelian, K3 };

inline const char* to_string(SurfaceKind k) {
    return k == SurfaceKind::Abelian ? "abelian" : "k3";
}

// A Picard-rank-1 abelian or K3 surface, seen through its Mukai lattice:
// the kind fixes epsilon in v(x) = ch(x)(1 + eps*w), l_sq is the
// self-intersection (L^2) of the ample generator. (L^2) is always even.
struct Surface {
    SurfaceKind kind;
    Int l_sq;

    Surface(SurfaceKind kind_, Int l_sq_) : kind(kind_), l_sq(std::move(l_sq_)) {
        if (l_sq <= 0 || l_sq % 2 != 0)
            throw std::domain_error("Surface: (L^2) must be a positive even integer, got " +
                                    l_sq.str());
    }

    Int epsilon() const { return kind == SurfaceKind::K3 ? 1 : 0; }

    bool operator==(const Surface& o) const { return kind == o.kind && l_sq == o.l_sq; }
};

inline Surface abelian_surface(Int l_sq) { return Surface(SurfaceKind::Abelian, std::move(l_sq)); }
inline Surface k3_surface(Int l_sq) { return Surface(SurfaceKind::K3, std::move(l_sq)); }

}  // namespace mukai
