#pragma once

#include <cstdint>
#include <vector>

#include "ecarith/ffield.hpp"
#include "ecarith/proj.hpp"

namespace ecarith::hessian {

/// Twisted Hessian model a X^3 + Y^3 + Z^3 = XYZ with identity O = (0:1:-1),
/// over an odd prime field, p != 3. Its mu_3 quotient is
/// E_a : XYZ = a (X+Y+Z)^3 with the same identity.
struct HessianCurve {
    Fe a;
};

/// Validates a(27a - 1) != 0 and registers a as a small constant.
HessianCurve create(CountingContext& ctx, std::uint64_t a);

bool on_curve(const FieldSpec& F, const HessianCurve& c, const Proj3& P);
bool on_quotient(const FieldSpec& F, const HessianCurve& c, const Proj3& P);

Proj3 identity(const CountingContext& ctx);

/// Negation swaps the two coordinates fixed by the hyperplane through O.
/// No field operations.
Proj3 neg(const Proj3& P);

/// Complete bidegree-(2,2) addition: the standard law, falling back to the
/// rotated law (which also covers doubling). 12M per law evaluation; the
/// rotated law adds 2m for the twist parameter.
Proj3 add(CountingContext& ctx, const HessianCurve& c, const Proj3& P, const Proj3& Q);

/// mu_3 quotient isogeny (X:Y:Z) -> (aX^3 : Y^3 : Z^3). 3M + 3S + 1m.
Proj3 phi_mu3(CountingContext& ctx, const HessianCurve& c, const Proj3& P);

/// Dual isogeny E_a -> H_a via the norm-form basis g0 = (X+Y+Z)^3,
/// g1 = (Y+Z)(X+Z)(X+Y), g2 = (Y-Z)(Z-X)(X-Y). Emits the doubled projective
/// representative (2f0 : 2f1 : 2f2) so no halving is needed. 5M + 1S + 1m.
Proj3 psi_dual(CountingContext& ctx, const HessianCurve& c, const Proj3& P);

/// [3] = psi o phi. 8M + 4S + 2m.
Proj3 triple(CountingContext& ctx, const HessianCurve& c, const Proj3& P);

/// Windowed base-3^w scalar multiplication: unit-digit multiples are
/// precomputed with add, the main loop runs triplings.
Proj3 scalar_mul_base3(CountingContext& ctx, const HessianCurve& c, std::uint64_t k,
                       const Proj3& P, unsigned window = 1);

/// All projective points by plane scan; odd prime fields, p <= 10^4.
std::vector<Proj3> enumerate_points(const FieldSpec& F, const HessianCurve& c);

} // namespace ecarith::hessian
