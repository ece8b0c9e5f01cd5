#include "ecarith/xforms.hpp"

#include <vector>

#include "ecarith/errors.hpp"

namespace ecarith::xforms {

namespace {

/// Weighted-projective equality per the comparison convention: zero patterns
/// must match; normalize against a weight-1 coordinate nonzero on both sides
/// (cross-multiplied, no inversion), else fall back to weighted cross
/// products a_i^{w_j} b_j^{w_i} = b_i^{w_j} a_j^{w_i}.
bool weighted_eq(const FieldSpec& F, const std::vector<std::uint64_t>& a,
                 const std::vector<std::uint64_t>& b, const std::vector<unsigned>& w) {
    const std::size_t n = a.size();
    bool a_zero = true, b_zero = true;
    for (std::size_t i = 0; i < n; ++i) {
        if ((a[i] == 0) != (b[i] == 0)) return false;
        a_zero &= a[i] == 0;
        b_zero &= b[i] == 0;
    }
    if (a_zero || b_zero) return false;
    for (std::size_t k = 0; k < n; ++k) {
        if (w[k] != 1 || a[k] == 0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t ak = F.pow(a[k], w[i]), bk = F.pow(b[k], w[i]);
            if (F.mul(b[i], ak) != F.mul(a[i], bk)) return false;
        }
        return true;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a[i] == 0 || a[j] == 0) continue;
            std::uint64_t lhs = F.mul(F.pow(a[i], w[j]), F.pow(b[j], w[i]));
            std::uint64_t rhs = F.mul(F.pow(b[i], w[j]), F.pow(a[j], w[i]));
            if (lhs != rhs) return false;
        }
    return true;
}

} // namespace

Proj3 jac_to_p2(CountingContext& ctx, const JacPoint& P) {
    if (P.X.v == 0 && P.Y.v == 0 && P.Z.v == 0)
        throw ContractViolationError("all-zero tuple");
    Fe xz = ctx.mul(P.X, P.Z);
    Fe z3 = ctx.mul(ctx.square(P.Z), P.Z);
    return Proj3{{xz, P.Y, z3}};
}

JacPoint jac_from_p2(CountingContext& ctx, const Proj3& P) {
    if (P[0].v == 0 && P[2].v == 0)
        throw UndefinedPointError("jac_from_p2 is undefined at (0:1:0)");
    Fe xz = ctx.mul(P[0], P[2]);
    Fe yz2 = ctx.mul(P[1], ctx.square(P[2]));
    return JacPoint{xz, yz2, P[2]};
}

Proj4 ld_to_p3(CountingContext& ctx, const LdPoint& P) {
    if (P.X.v == 0 && P.Z.v == 0)
        throw ContractViolationError("(X,Z) = (0,0) is a base point");
    Fe x2 = ctx.square(P.X);
    Fe xz = ctx.mul(P.X, P.Z);
    Fe z2 = ctx.square(P.Z);
    return Proj4{{x2, xz, z2, P.Y}};
}

LdPoint ld_from_p3(CountingContext& ctx, const Proj4& P) {
    Fe b1y = ctx.mul(P[2], P[3]);
    LdPoint b1{P[1], b1y, P[2]};
    if (b1.X.v != 0 || b1.Y.v != 0 || b1.Z.v != 0) return b1;
    Fe b2y = ctx.mul(P[0], P[3]);
    LdPoint b2{P[0], b2y, P[1]};
    if (b2.X.v != 0 || b2.Y.v != 0 || b2.Z.v != 0) return b2;
    throw UndefinedPointError("both branches vanish");
}

Proj4 xld_to_p3(CountingContext& ctx, const XldPoint& P) {
    const FieldSpec& F = ctx.field();
    if (F.mul(P.Z.v, P.Z.v) != P.W.v)
        throw ContractViolationError("extended coordinates need W = Z^2");
    if (P.X.v == 0 && P.Z.v == 0)
        throw ContractViolationError("(X,Z) = (0,0) is a base point");
    Fe x2 = ctx.square(P.X);
    Fe xz = ctx.mul(P.X, P.Z);
    return Proj4{{x2, xz, P.W, P.Y}};
}

bool segre_check(const FieldSpec& F, const Proj4& P) {
    return F.mul(P[0].v, P[3].v) == F.mul(P[1].v, P[2].v);
}

bool jac_eq(const FieldSpec& F, const JacPoint& a, const JacPoint& b) {
    return weighted_eq(F, {a.X.v, a.Y.v, a.Z.v}, {b.X.v, b.Y.v, b.Z.v}, {2, 3, 1});
}

bool ld_eq(const FieldSpec& F, const LdPoint& a, const LdPoint& b) {
    return weighted_eq(F, {a.X.v, a.Y.v, a.Z.v}, {b.X.v, b.Y.v, b.Z.v}, {1, 2, 1});
}

bool xld_eq(const FieldSpec& F, const XldPoint& a, const XldPoint& b) {
    return weighted_eq(F, {a.X.v, a.Y.v, a.Z.v, a.W.v}, {b.X.v, b.Y.v, b.Z.v, b.W.v},
                       {1, 2, 1, 2});
}

} // namespace ecarith::xforms
