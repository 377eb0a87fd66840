#pragma once

#include <array>
#include <ostream>
#include <stdexcept>

#include "mukai/mukai_vector.hpp"
#include "mukai/types.hpp"

namespace mukai {

// 3x3 matrix of unbounded integers acting on (r, d, a) triples in the basis
// (1, c1(L), w). Stored column-major; the columns are the images of the
// basis vectors.
struct IntMatrix3 {
    std::array<Int, 9> e;  // e[col*3 + row]

    static IntMatrix3 identity() {
        IntMatrix3 m{};
        m.e = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return m;
    }

    static IntMatrix3 from_columns(const MukaiVector& c0, const MukaiVector& c1,
                                   const MukaiVector& c2) {
        IntMatrix3 m{};
        m.e = {c0.r, c0.d, c0.a, c1.r, c1.d, c1.a, c2.r, c2.d, c2.a};
        return m;
    }

    const Int& at(int row, int col) const { return e[col * 3 + row]; }
    Int& at(int row, int col) { return e[col * 3 + row]; }

    MukaiVector column(int col) const { return {at(0, col), at(1, col), at(2, col)}; }

    MukaiVector apply(const MukaiVector& v) const {
        return {at(0, 0) * v.r + at(0, 1) * v.d + at(0, 2) * v.a,
                at(1, 0) * v.r + at(1, 1) * v.d + at(1, 2) * v.a,
                at(2, 0) * v.r + at(2, 1) * v.d + at(2, 2) * v.a};
    }

    Int det() const {
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }

    // Transpose of the cofactor matrix; M * adj(M) = det(M) * I.
    IntMatrix3 adjugate() const {
        IntMatrix3 m{};
        m.at(0, 0) = at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1);
        m.at(0, 1) = at(0, 2) * at(2, 1) - at(0, 1) * at(2, 2);
        m.at(0, 2) = at(0, 1) * at(1, 2) - at(0, 2) * at(1, 1);
        m.at(1, 0) = at(1, 2) * at(2, 0) - at(1, 0) * at(2, 2);
        m.at(1, 1) = at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0);
        m.at(1, 2) = at(0, 2) * at(1, 0) - at(0, 0) * at(1, 2);
        m.at(2, 0) = at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0);
        m.at(2, 1) = at(0, 1) * at(2, 0) - at(0, 0) * at(2, 1);
        m.at(2, 2) = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        return m;
    }

    // Exact integral inverse; only defined when det = +-1.
    IntMatrix3 inverse_unimodular() const {
        Int dt = det();
        if (dt != 1 && dt != -1)
            throw std::domain_error("inverse_unimodular: det = " + dt.str() + ", not a unit");
        IntMatrix3 adj = adjugate();
        if (dt == -1)
            for (Int& x : adj.e) x = -x;
        return adj;
    }

    bool operator==(const IntMatrix3& o) const { return e == o.e; }
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix3& m) {
    for (int row = 0; row < 3; ++row) {
        os << (row == 0 ? "[" : " ");
        for (int col = 0; col < 3; ++col) os << m.at(row, col) << (col < 2 ? " " : "");
        os << (row == 2 ? "]" : "\n");
    }
    return os;
}

}  // namespace mukai
