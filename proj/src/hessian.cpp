#include "ecarith/hessian.hpp"

#include "ecarith/errors.hpp"

namespace ecarith::hessian {

HessianCurve create(CountingContext& ctx, std::uint64_t a) {
    const FieldSpec& F = ctx.field();
    if (F.kind() != FieldKind::OddPrime)
        throw UnsupportedError("twisted Hessian module needs an odd prime field");
    if (F.modulus() == 3) throw UnsupportedError("characteristic 3 excluded");
    std::uint64_t disc = F.mul(a, F.sub(F.mul(F.from_int(27), a), F.from_int(1)));
    if (disc == 0) throw SingularCurveError("a(27a - 1) = 0");
    return HessianCurve{ctx.register_constant(ctx.fe(a))};
}

bool on_curve(const FieldSpec& F, const HessianCurve& c, const Proj3& P) {
    if (proj_is_zero(P)) return false;
    std::uint64_t X = P[0].v, Y = P[1].v, Z = P[2].v;
    std::uint64_t lhs = F.mul(c.a.v, F.mul(X, F.mul(X, X)));
    lhs = F.add(lhs, F.mul(Y, F.mul(Y, Y)));
    lhs = F.add(lhs, F.mul(Z, F.mul(Z, Z)));
    return lhs == F.mul(X, F.mul(Y, Z));
}

bool on_quotient(const FieldSpec& F, const HessianCurve& c, const Proj3& P) {
    if (proj_is_zero(P)) return false;
    std::uint64_t X = P[0].v, Y = P[1].v, Z = P[2].v;
    std::uint64_t s = F.add(X, F.add(Y, Z));
    return F.mul(X, F.mul(Y, Z)) == F.mul(c.a.v, F.mul(s, F.mul(s, s)));
}

Proj3 identity(const CountingContext& ctx) {
    return Proj3{{ctx.zero(), ctx.one(), ctx.from_int(-1)}};
}

Proj3 neg(const Proj3& P) { return Proj3{{P[0], P[2], P[1]}}; }

namespace {

// standard law: vanishes iff P - Q lies in the X = 0 fiber (so on the diagonal)
Proj3 add_standard(CountingContext& ctx, const Proj3& P, const Proj3& Q) {
    Fe x1y2 = ctx.mul(P[0], Q[1]);
    Fe x1z2 = ctx.mul(P[0], Q[2]);
    Fe y1x2 = ctx.mul(P[1], Q[0]);
    Fe z1x2 = ctx.mul(P[2], Q[0]);
    Fe z1y2 = ctx.mul(P[2], Q[1]);
    Fe y1z2 = ctx.mul(P[1], Q[2]);
    Fe X3 = ctx.sub(ctx.mul(x1y2, x1z2), ctx.mul(y1x2, z1x2));
    Fe Y3 = ctx.sub(ctx.mul(z1x2, z1y2), ctx.mul(x1z2, y1z2));
    Fe Z3 = ctx.sub(ctx.mul(y1x2, y1z2), ctx.mul(x1y2, z1y2));
    return Proj3{{X3, Y3, Z3}};
}

// rotated law: vanishes iff P - Q lies in the Z = 0 fiber; the two fibers are
// disjoint on the curve, so the pair is a complete system
Proj3 add_rotated(CountingContext& ctx, const HessianCurve& c, const Proj3& P, const Proj3& Q) {
    Fe x1z2 = ctx.mul(P[0], Q[2]);
    Fe z1z2 = ctx.mul(P[2], Q[2]);
    Fe y1x2 = ctx.mul(P[1], Q[0]);
    Fe y1y2 = ctx.mul(P[1], Q[1]);
    Fe z1y2 = ctx.mul(P[2], Q[1]);
    Fe x1x2 = ctx.mul(P[0], Q[0]);
    Fe X3 = ctx.sub(ctx.mul(x1z2, z1z2), ctx.mul(y1x2, y1y2));
    Fe Y3 = ctx.sub(ctx.mul(y1y2, z1y2), ctx.mul_const(c.a, ctx.mul(x1x2, x1z2)));
    Fe Z3 = ctx.sub(ctx.mul_const(c.a, ctx.mul(x1x2, y1x2)), ctx.mul(z1y2, z1z2));
    return Proj3{{X3, Y3, Z3}};
}

} // namespace

Proj3 add(CountingContext& ctx, const HessianCurve& c, const Proj3& P, const Proj3& Q) {
    if (!proj_eq(ctx.field(), P, Q)) {
        Proj3 R = add_standard(ctx, P, Q);
        if (!proj_is_zero(R)) return R;
    }
    Proj3 R = add_rotated(ctx, c, P, Q);
    if (proj_is_zero(R)) throw InternalInvariantError("both addition laws vanished");
    return R;
}

Proj3 phi_mu3(CountingContext& ctx, const HessianCurve& c, const Proj3& P) {
    auto cube = [&](Fe t) { return ctx.mul(ctx.square(t), t); };  // 1S + 1M
    return Proj3{{ctx.mul_const(c.a, cube(P[0])), cube(P[1]), cube(P[2])}};
}

Proj3 psi_dual(CountingContext& ctx, const HessianCurve& c, const Proj3& P) {
    if (ctx.field().characteristic() == 2) throw UnsupportedError("psi_dual needs char != 2");
    Fe X = P[0], Y = P[1], Z = P[2];
    Fe s = ctx.add(ctx.add(X, Y), Z);
    Fe g0 = ctx.mul(ctx.square(s), s);                                    // 1M+1S
    Fe g1 = ctx.mul(ctx.mul(ctx.add(Y, Z), ctx.add(X, Z)), ctx.add(X, Y));  // 2M
    Fe g2 = ctx.mul(ctx.mul(ctx.sub(Y, Z), ctx.sub(Z, X)), ctx.sub(X, Y));  // 2M
    Fe t = ctx.mul_const(c.a, g0);                                        // 1m
    // doubled representative: 2f0 = 2g0 - 6t - 6g1, 2f1 = g1 - g2 - 8t,
    // 2f2 = g1 + g2 - 8t
    Fe t8 = ctx.small_mul(8, t);
    Fe f0 = ctx.sub(ctx.sub(ctx.small_mul(2, g0), ctx.small_mul(6, t)), ctx.small_mul(6, g1));
    Fe f1 = ctx.sub(ctx.sub(g1, g2), t8);
    Fe f2 = ctx.sub(ctx.add(g1, g2), t8);
    return Proj3{{f0, f1, f2}};
}

Proj3 triple(CountingContext& ctx, const HessianCurve& c, const Proj3& P) {
    return psi_dual(ctx, c, phi_mu3(ctx, c, P));
}

Proj3 scalar_mul_base3(CountingContext& ctx, const HessianCurve& c, std::uint64_t k,
                       const Proj3& P, unsigned window) {
    if (window < 1 || window > 8) throw ContractViolationError("window must be in [1,8]");
    Proj3 O = identity(ctx);
    if (k == 0) return O;

    std::uint64_t base = 1;
    for (unsigned i = 0; i < window; ++i) base *= 3;

    std::vector<std::uint64_t> digits;
    for (std::uint64_t t = k; t; t /= base) digits.push_back(t % base);

    // unit digits (not divisible by 3) are precomputed; a digit 3^s * u is
    // handled as s extra triplings of table[u]
    std::vector<Proj3> table(base, O);
    Proj3 cur = P;
    table[1] = P;
    for (std::uint64_t d = 2; d < base; ++d) {
        cur = add(ctx, c, cur, P);
        if (d % 3 != 0) table[d] = cur;
    }

    auto digit_multiple = [&](std::uint64_t d) {
        unsigned s = 0;
        while (d % 3 == 0) { d /= 3; ++s; }
        Proj3 R = table[d];
        for (unsigned i = 0; i < s; ++i) R = triple(ctx, c, R);
        return R;
    };

    Proj3 R = digits.back() ? digit_multiple(digits.back()) : O;
    for (auto it = digits.rbegin() + 1; it != digits.rend(); ++it) {
        for (unsigned i = 0; i < window; ++i) R = triple(ctx, c, R);
        if (*it) R = add(ctx, c, R, digit_multiple(*it));
    }
    return R;
}

std::vector<Proj3> enumerate_points(const FieldSpec& F, const HessianCurve& c) {
    if (F.kind() != FieldKind::OddPrime || F.modulus() > 10000)
        throw RefusalError("enumeration limited to odd prime fields, p <= 10^4");
    std::vector<Proj3> pts;
    auto mk = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
        return Proj3{{Fe{x, &F}, Fe{y, &F}, Fe{z, &F}}};
    };
    const std::uint64_t p = F.modulus();
    auto push_if = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
        Proj3 P = mk(x, y, z);
        if (on_curve(F, c, P)) pts.push_back(P);
    };
    for (std::uint64_t y = 0; y < p; ++y)
        for (std::uint64_t z = 0; z < p; ++z) push_if(1, y, z);
    for (std::uint64_t z = 0; z < p; ++z) push_if(0, 1, z);
    push_if(0, 0, 1);
    return pts;
}

} // namespace ecarith::hessian
