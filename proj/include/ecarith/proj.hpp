#pragma once

#include <array>
#include <cstddef>

#include "ecarith/ffield.hpp"

namespace ecarith {

/// Point of P^{N-1}: coordinate tuple defined up to a nonzero scalar.
template <std::size_t N>
struct ProjPoint {
    std::array<Fe, N> c{};

    Fe operator[](std::size_t i) const { return c[i]; }
    Fe& operator[](std::size_t i) { return c[i]; }
};

using Proj3 = ProjPoint<3>;
using Proj4 = ProjPoint<4>;

template <std::size_t N>
bool proj_is_zero(const ProjPoint<N>& a) {
    for (std::size_t i = 0; i < N; ++i)
        if (a.c[i].v != 0) return false;
    return true;
}

/// Canonical projective comparison: all 2x2 cross products vanish. Uses raw
/// field multiplications; never normalizes, never inverts.
template <std::size_t N>
bool proj_eq(const FieldSpec& F, const ProjPoint<N>& a, const ProjPoint<N>& b) {
    if (proj_is_zero(a) || proj_is_zero(b)) return false;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (F.mul(a.c[i].v, b.c[j].v) != F.mul(a.c[j].v, b.c[i].v)) return false;
    return true;
}

} // namespace ecarith
