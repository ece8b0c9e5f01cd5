#pragma once

#include "ecarith/ffield.hpp"
#include "ecarith/proj.hpp"

namespace ecarith::xforms {

/// Jacobian coordinates: weights (2,3,1), (X:Y:Z) ~ (l^2 X : l^3 Y : l Z).
struct JacPoint {
    Fe X, Y, Z;
};

/// Lopez-Dahab coordinates: weights (1,2,1).
struct LdPoint {
    Fe X, Y, Z;
};

/// Extended Lopez-Dahab: weights (1,2,1,2), constrained to W = Z^2.
struct XldPoint {
    Fe X, Y, Z, W;
};

/// (X:Y:Z) -> (XZ : Y : Z^3); sends (0:1:0) to (0:1:0).
Proj3 jac_to_p2(CountingContext& ctx, const JacPoint& P);

/// Birational inverse (X:Y:Z) -> (XZ : YZ^2 : Z), undefined at (0:1:0).
JacPoint jac_from_p2(CountingContext& ctx, const Proj3& P);

/// (X:Y:Z) -> (X^2 : XZ : Z^2 : Y) onto the surface X0 X2 = X1^2.
Proj4 ld_to_p3(CountingContext& ctx, const LdPoint& P);

/// Inverse via the two branches (X1 : X2 X3 : X2) and (X0 : X0 X3 : X1);
/// returns whichever is nonzero (they agree in the weighted sense).
LdPoint ld_from_p3(CountingContext& ctx, const Proj4& P);

/// Same image as ld_to_p3, with W standing in for Z^2 (one squaring saved).
Proj4 xld_to_p3(CountingContext& ctx, const XldPoint& P);

/// Membership in the Segre quadric X0 X3 = X1 X2.
bool segre_check(const FieldSpec& F, const Proj4& P);

bool jac_eq(const FieldSpec& F, const JacPoint& a, const JacPoint& b);
bool ld_eq(const FieldSpec& F, const LdPoint& a, const LdPoint& b);
bool xld_eq(const FieldSpec& F, const XldPoint& a, const XldPoint& b);

} // namespace ecarith::xforms
