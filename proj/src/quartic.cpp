#include "ecarith/quartic.hpp"

#include "ecarith/errors.hpp"

namespace ecarith::quartic {

std::optional<Fe> twist_parameter(CountingContext& ctx, std::uint64_t u) {
    const FieldSpec& F = ctx.field();
    if (F.characteristic() == 2) throw UnsupportedError("twist parameter needs char != 2");
    std::uint64_t a1 = F.add(F.mul(F.from_int(4), u), F.from_int(1));
    auto r = F.sqrt(F.neg(a1));
    if (!r || *r == 0) return std::nullopt;  // r = 0 would give 2s+1 = 0
    std::uint64_t s = F.div(F.sub(*r, F.from_int(1)), F.from_int(2));
    return ctx.fe(s);
}

Level2Params create(CountingContext& ctx, std::uint64_t u, std::uint64_t v, bool derive_twist) {
    const FieldSpec& F = ctx.field();
    if (wmodel::level2_discriminant(F, u, v) == 0)
        throw SingularCurveError("level-2 family discriminant vanishes");

    Level2Params p;
    p.u = ctx.register_constant(ctx.fe(u));
    p.v = ctx.register_constant(ctx.fe(v));
    p.v_inv = ctx.register_constant(ctx.inv(p.v));  // the one amortized inversion
    p.a1 = ctx.register_constant(ctx.fe(F.add(F.mul(F.from_int(4), u), F.from_int(1))));
    p.four_v = ctx.register_constant(ctx.fe(F.mul(F.from_int(4), v)));
    p.a1v = ctx.register_constant(ctx.fe(F.mul(p.a1.v, v)));
    p.c_u1 = ctx.register_constant(ctx.fe(F.add(u, F.from_int(1))));
    p.c_2u1 = ctx.register_constant(ctx.fe(F.add(F.mul(F.from_int(2), u), F.from_int(1))));
    std::uint64_t fold = F.mul(F.from_int(2), F.sub(F.from_int(1), F.mul(F.from_int(2), F.add(u, v))));
    p.c_fold = ctx.register_constant(ctx.fe(fold));
    if (F.characteristic() != 2) {
        p.c_ratio = ctx.register_constant(ctx.fe(F.div(p.a1.v, p.four_v.v)));
        if (derive_twist) {
            p.s = twist_parameter(ctx, u);
            if (p.s) {
                ctx.register_constant(*p.s);
                p.s21 = ctx.register_constant(
                    ctx.fe(F.add(F.mul(F.from_int(2), p.s->v), F.from_int(1))));
            }
        }
    } else {
        p.c_ratio = ctx.zero();
    }
    return p;
}

wmodel::WeierstrassCurve weierstrass_of(const FieldSpec& F, const Level2Params& p, QModel model) {
    return model == QModel::Q1 ? wmodel::e1_from_params(F, p.u.v, p.v.v)
                               : wmodel::e2_from_params(F, p.u.v, p.v.v);
}

bool on_model(const FieldSpec& F, const Level2Params& p, const QuarticPoint& P) {
    if (proj_is_zero(P.P)) return false;
    std::uint64_t X0 = P.P[0].v, X1 = P.P[1].v, X2 = P.P[2].v, X3 = P.P[3].v;
    if (F.mul(X1, X1) != F.mul(X0, X2)) return false;
    std::uint64_t lhs = F.add(F.mul(X3, X3), F.mul(X1, X3));
    std::uint64_t rhs;
    if (P.model == QModel::Q1) {
        rhs = F.mul(F.sub(F.add(X0, F.mul(p.u.v, X1)), F.mul(p.v.v, X2)), X1);
    } else {
        rhs = F.mul(F.add(X0, F.mul(p.four_v.v, X2)), F.add(X1, F.mul(p.u.v, X2)));
        rhs = F.add(rhs, F.mul(p.v.v, F.mul(X2, X2)));
    }
    return lhs == rhs;
}

bool on_d1(const FieldSpec& F, const Level2Params& p, const D1Point& P) {
    if (proj_is_zero(P.P)) return false;
    std::uint64_t X = P.P[0].v, Y = P.P[1].v, Z = P.P[2].v;
    std::uint64_t t = F.sub(F.mul(Y, Y), F.mul(p.a1.v, F.mul(X, Z)));
    std::uint64_t d = F.sub(X, F.mul(p.v.v, Z));
    std::uint64_t rhs = F.mul(F.from_int(16), F.mul(F.mul(X, Z), F.mul(d, d)));
    return F.mul(t, t) == rhs;
}

bool is_d1_singular(const FieldSpec& F, const Level2Params& p, const D1Point& P) {
    std::uint64_t X = P.P[0].v, Y = P.P[1].v, Z = P.P[2].v;
    return F.sub(X, F.mul(p.v.v, Z)) == 0 &&
           F.mul(Y, Y) == F.mul(p.a1v.v, F.mul(Z, Z));
}

QuarticPoint identity(const CountingContext& ctx, QModel model) {
    return QuarticPoint{Proj4{{ctx.one(), ctx.zero(), ctx.zero(), ctx.zero()}}, model};
}

QuarticPoint embed(const CountingContext& ctx, const Level2Params& p, QModel model,
                   const wmodel::PointW& P) {
    const FieldSpec& F = ctx.field();
    if (P.inf) return identity(ctx, model);
    auto c = weierstrass_of(F, p, model);
    if (!wmodel::on_curve(c, P)) throw ContractViolationError("embed: point off curve");
    return QuarticPoint{
        Proj4{{ctx.fe(F.mul(P.x, P.x)), ctx.fe(P.x), ctx.one(), ctx.fe(P.y)}}, model};
}

wmodel::PointW lift(const CountingContext& ctx, const Level2Params& p, const QuarticPoint& P) {
    const FieldSpec& F = ctx.field();
    (void)p;
    std::uint64_t X1 = P.P[1].v, X2 = P.P[2].v, X3 = P.P[3].v;
    if (X1 == 0 && X2 == 0 && X3 == 0) return wmodel::PointW::infinity();
    // on the smooth model X2 = 0 forces the identity (X1^2 = X0 X2, then the
    // curve quadric kills X3)
    if (X2 == 0) throw InternalInvariantError("lift: X2 = 0 away from the identity");
    std::uint64_t iz = F.inv(X2);
    return wmodel::PointW::affine(F.mul(X1, iz), F.mul(X3, iz));
}

// ---------------------------------------------------------------------------
// isogenies

QuarticPoint psi_raw(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P) {
    if (P.model != QModel::Q1) throw ContractViolationError("psi acts on Q1");
    Fe X0 = P.P[0], X1 = P.P[1], X2 = P.P[2], X3 = P.P[3];
    Fe t = ctx.mul_const(p.v, X2);
    Fe d = ctx.sub(X0, t);
    Fe f0 = ctx.square(d);
    Fe f1 = ctx.mul(d, X1);
    Fe f2 = ctx.square(X1);
    Fe f3 = ctx.add(ctx.mul_const(p.v, ctx.mul(X1, X2)), ctx.mul(ctx.add(X0, t), X3));
    return QuarticPoint{Proj4{{f0, f1, f2, f3}}, QModel::Q2};
}

namespace {

QuarticPoint psi_fast_odd(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P) {
    Fe X0 = P.P[0], X1 = P.P[1], X2 = P.P[2], X3 = P.P[3];
    Fe t = ctx.mul_const(p.v, X2);
    Fe d = ctx.sub(X0, t);
    Fe g0 = ctx.square(d);
    Fe g1 = ctx.square(ctx.add(d, X1));
    Fe g2 = ctx.square(X1);
    Fe g3 = ctx.square(ctx.add(ctx.add(ctx.add(X0, X1), t), ctx.small_mul(2, X3)));
    // 4-scaled representative: (4f0, 4f1, 4f2, 4f3) with
    //   4f1 = 2(g1 - g0 - g2),  4f3 = 2g0 - 3g1 + 2(1-2(u+v)) g2 + g3
    Fe F0 = ctx.small_mul(4, g0);
    Fe F1 = ctx.small_mul(2, ctx.sub(g1, ctx.add(g0, g2)));
    Fe F2 = ctx.small_mul(4, g2);
    Fe F3 = ctx.add(ctx.add(ctx.sub(ctx.small_mul(2, g0), ctx.small_mul(3, g1)),
                            ctx.mul_const(p.c_fold, g2)),
                    g3);
    return QuarticPoint{Proj4{{F0, F1, F2, F3}}, QModel::Q2};
}

QuarticPoint psi_fast_char2(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P) {
    Fe X0 = P.P[0], X1 = P.P[1], X2 = P.P[2], X3 = P.P[3];
    Fe g0 = ctx.square(ctx.add(X0, ctx.mul_const(p.v, X2)));
    Fe g1 = ctx.mul(ctx.add(X1, X3), X3);
    Fe g2 = ctx.square(X1);
    Fe w = ctx.add(X1, X3);
    Fe g3 = ctx.mul(ctx.add(X0, ctx.mul_const(p.v, w)), ctx.add(X2, X3));
    // solved transform (det 1): f = (g0, g1 + u g2, g2, v g1 + g2 + g3)
    Fe f1 = ctx.add(g1, ctx.mul_const(p.u, g2));
    Fe f3 = ctx.add(ctx.add(ctx.mul_const(p.v, g1), g2), g3);
    return QuarticPoint{Proj4{{g0, f1, g2, f3}}, QModel::Q2};
}

} // namespace

QuarticPoint psi_fast(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P) {
    if (P.model != QModel::Q1) throw ContractViolationError("psi acts on Q1");
    return ctx.field().characteristic() == 2 ? psi_fast_char2(ctx, p, P)
                                             : psi_fast_odd(ctx, p, P);
}

QuarticPoint phi_raw(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P) {
    if (P.model != QModel::Q2) throw ContractViolationError("phi acts on Q2");
    Fe X0 = P.P[0], X1 = P.P[1], X2 = P.P[2], X3 = P.P[3];
    Fe f0 = ctx.square(ctx.add(X0, ctx.mul_const(p.four_v, X2)));
    Fe f1 = ctx.square(ctx.add(X1, ctx.small_mul(2, X3)));
    Fe f2 = ctx.square(ctx.add(ctx.small_mul(4, X1), ctx.mul_const(p.a1, X2)));
    // f3 = u X1^2 - 8v X1 X2 - (4u+1)v X2^2 + 2 X0 X3 + 4u X1 X3 - 8v X2 X3 - X3^2
    Fe f3 = ctx.mul_const(p.u, ctx.square(X1));
    f3 = ctx.sub(f3, ctx.small_mul(8, ctx.mul_const(p.v, ctx.mul(X1, X2))));
    f3 = ctx.sub(f3, ctx.mul_const(p.a1v, ctx.square(X2)));
    f3 = ctx.add(f3, ctx.small_mul(2, ctx.mul(X0, X3)));
    f3 = ctx.add(f3, ctx.small_mul(4, ctx.mul_const(p.u, ctx.mul(X1, X3))));
    f3 = ctx.sub(f3, ctx.small_mul(8, ctx.mul_const(p.v, ctx.mul(X2, X3))));
    f3 = ctx.sub(f3, ctx.square(X3));
    return QuarticPoint{Proj4{{f0, f1, f2, f3}}, QModel::Q1};
}

namespace {

QuarticPoint phi_fast_odd(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P) {
    Fe X0 = P.P[0], X1 = P.P[1], X2 = P.P[2], X3 = P.P[3];
    Fe t4v = ctx.mul_const(p.four_v, X2);
    Fe g0 = ctx.square(ctx.add(X0, t4v));
    Fe g1 = ctx.square(ctx.add(X1, ctx.small_mul(2, X3)));
    Fe g2 = ctx.square(ctx.add(ctx.small_mul(4, X1), ctx.mul_const(p.a1, X2)));
    Fe g3 = ctx.square(ctx.add(ctx.sub(ctx.add(X0, ctx.mul_const(p.c_2u1, X1)), t4v), X3));
    // f3 = -g0 - (u+1) g1 + v g2 + g3
    Fe f3 = ctx.add(ctx.sub(ctx.mul_const(p.v, g2), ctx.add(g0, ctx.mul_const(p.c_u1, g1))), g3);
    return QuarticPoint{Proj4{{g0, g1, g2, f3}}, QModel::Q1};
}

QuarticPoint phi_fast_char2(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P) {
    Fe g0 = ctx.square(P.P[0]);
    Fe g1 = ctx.square(P.P[1]);
    Fe g2 = ctx.square(P.P[2]);
    Fe g3 = ctx.square(P.P[3]);
    Fe f3 = ctx.add(ctx.add(ctx.mul_const(p.u, g1), ctx.mul_const(p.v, g2)), g3);
    return QuarticPoint{Proj4{{g0, g1, g2, f3}}, QModel::Q1};
}

} // namespace

QuarticPoint phi_fast(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P) {
    if (P.model != QModel::Q2) throw ContractViolationError("phi acts on Q2");
    return ctx.field().characteristic() == 2 ? phi_fast_char2(ctx, p, P)
                                             : phi_fast_odd(ctx, p, P);
}

QuarticPoint double_q(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P) {
    return P.model == QModel::Q1 ? phi_fast(ctx, p, psi_fast(ctx, p, P))
                                 : psi_fast(ctx, p, phi_fast(ctx, p, P));
}

QuarticPoint tau_translate(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P) {
    if (P.model != QModel::Q1) throw ContractViolationError("tau_T lives on Q1");
    return QuarticPoint{Proj4{{ctx.mul_const(p.v, P.P[2]), ctx.neg(P.P[1]),
                               ctx.mul_const(p.v_inv, P.P[0]), ctx.add(P.P[1], P.P[3])}},
                        QModel::Q1};
}

QuarticPoint negate_q1(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P) {
    (void)p;
    if (P.model != QModel::Q1) throw ContractViolationError("negate_q1 lives on Q1");
    return QuarticPoint{Proj4{{P.P[0], P.P[1], P.P[2], ctx.neg(ctx.add(P.P[1], P.P[3]))}},
                        QModel::Q1};
}

D1Point project_d1(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P) {
    (void)p;
    if (ctx.field().characteristic() == 2)
        throw UnsupportedError("the D1 quotient is a char != 2 construction");
    if (P.model != QModel::Q1) throw ContractViolationError("project_d1 acts on Q1");
    return D1Point{Proj3{{P.P[0], ctx.add(P.P[1], ctx.small_mul(2, P.P[3])), P.P[2]}}};
}

namespace {

// D1 -> Q2 forms; shared by the checked public map and the doubling pipeline
// (which must pass through nodes unchecked: node preimages are tau_T
// translates and share one image).
QuarticPoint psi_d1_forms(CountingContext& ctx, const Level2Params& p, const D1Point& P) {
    Fe X = P.P[0], Y = P.P[1], Z = P.P[2];
    Fe t = ctx.mul_const(p.v, Z);
    Fe d = ctx.sub(X, t);
    Fe e = ctx.add(X, t);
    Fe g0 = ctx.square(d);
    Fe g1 = ctx.square(Y);
    Fe g2 = ctx.square(e);
    Fe g3 = ctx.square(ctx.add(e, Y));
    Fe diff = ctx.sub(g2, g0);
    Fe cd = ctx.mul_const(p.c_ratio, diff);  // (4u+1) XZ
    // (8(X-vZ)^2, 2(Y^2-(4u+1)XZ), 8XZ, 4Y(X+vZ) - (Y^2-(4u+1)XZ))
    Fe f0 = ctx.small_mul(8, g0);
    Fe f1 = ctx.small_mul(2, ctx.sub(g1, cd));
    Fe f2 = ctx.small_mul(2, ctx.mul_const(p.v_inv, diff));
    Fe f3 = ctx.add(ctx.sub(ctx.sub(ctx.small_mul(2, g3), ctx.small_mul(3, g1)),
                            ctx.small_mul(2, g2)),
                    cd);
    return QuarticPoint{Proj4{{f0, f1, f2, f3}}, QModel::Q2};
}

} // namespace

QuarticPoint psi_d1(CountingContext& ctx, const Level2Params& p, const D1Point& P) {
    if (ctx.field().characteristic() == 2) throw UnsupportedError("psi_d1 needs char != 2");
    if (!on_d1(ctx.field(), p, P)) throw ContractViolationError("psi_d1: point not on D1");
    if (is_d1_singular(ctx.field(), p, P))
        throw SingularInputError("psi_d1: singular point of D1");
    return psi_d1_forms(ctx, p, P);
}

D1Point phi_d1(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P,
               PhiD1Mode mode) {
    if (ctx.field().characteristic() == 2) throw UnsupportedError("phi_d1 needs char != 2");
    if (P.model != QModel::Q2) throw ContractViolationError("phi_d1 acts on Q2");
    Fe X0 = P.P[0], X1 = P.P[1], X2 = P.P[2], X3 = P.P[3];
    Fe t4v = ctx.mul_const(p.four_v, X2);
    if (mode == PhiD1Mode::Generic) {
        Fe f0 = ctx.square(ctx.add(X0, t4v));
        Fe f2 = ctx.square(ctx.add(ctx.small_mul(4, X1), ctx.mul_const(p.a1, X2)));
        // (X1 + 2X3)(2X0 + (4u+1)X1 - 8vX2)
        Fe f1 = ctx.mul(ctx.add(X1, ctx.small_mul(2, X3)),
                        ctx.sub(ctx.add(ctx.small_mul(2, X0), ctx.mul_const(p.a1, X1)),
                                ctx.small_mul(2, t4v)));
        return D1Point{Proj3{{f0, f1, f2}}};
    }
    if (!p.has_twist()) throw MissingTwistError("phi_d1 twist mode without s");
    Fe g0 = ctx.square(ctx.add(X0, t4v));
    Fe g2 = ctx.square(ctx.add(ctx.small_mul(4, X1), ctx.mul_const(p.a1, X2)));
    Fe inner = ctx.sub(ctx.mul_const(*p.s, X1), X3);
    Fe g1 = ctx.square(ctx.sub(ctx.sub(X0, t4v), ctx.mul_const(p.s21, inner)));
    // (2s+1) f1 = -2(g0 - g1 - v g2): emit the (2s+1)-scaled representative
    Fe f1 = ctx.neg(ctx.small_mul(2, ctx.sub(g0, ctx.add(g1, ctx.mul_const(p.v, g2)))));
    return D1Point{Proj3{{ctx.mul_const(p.s21, g0), f1, ctx.mul_const(p.s21, g2)}}};
}

QuarticPoint double_q2_fast(CountingContext& ctx, const Level2Params& p,
                            const QuarticPoint& P, PhiD1Mode mode) {
    return psi_d1_forms(ctx, p, phi_d1(ctx, p, P, mode));
}

bool d1_singular_locus_check(const FieldSpec& F, const Level2Params& p) {
    if (F.characteristic() == 2) throw UnsupportedError("char != 2 construction");
    return !F.is_square(p.a1v.v);
}

QuarticPoint scalar_mul_base2(CountingContext& ctx, const Level2Params& p, std::uint64_t k,
                              const QuarticPoint& P, PhiD1Mode mode) {
    if (P.model != QModel::Q2) throw ContractViolationError("scalar_mul_base2 runs on Q2");
    if (k == 0) return identity(ctx, QModel::Q2);
    auto c2 = weierstrass_of(ctx.field(), p, QModel::Q2);
    auto oracle_add = [&](const QuarticPoint& A) {
        // addition step through the oracle; not part of the counted cost
        auto a = lift(ctx, p, A);
        auto b = lift(ctx, p, P);
        return embed(ctx, p, QModel::Q2, wmodel::add(c2, a, b));
    };
    int top = 63 - __builtin_clzll(k);
    QuarticPoint R = P;
    for (int i = top - 1; i >= 0; --i) {
        R = double_q2_fast(ctx, p, R, mode);
        if ((k >> i) & 1) R = oracle_add(R);
    }
    return R;
}

// ---------------------------------------------------------------------------
// basis-change certificates

Mat4 psi_basis_matrix(const FieldSpec& F, const Level2Params& p) {
    if (F.characteristic() == 2)
        throw UnsupportedError("this normalization lives in char != 2");
    auto i = [&](std::int64_t n) { return F.from_int(n); };
    return Mat4{{{i(4), 0, 0, 0},
                 {i(-2), i(2), i(-2), 0},
                 {0, 0, i(4), 0},
                 {i(2), i(-3), p.c_fold.v, i(1)}}};
}

Mat4 psi_basis_matrix_char2(const FieldSpec& F, const Level2Params& p) {
    if (F.characteristic() != 2) throw UnsupportedError("char-2 transform");
    auto i = [&](std::int64_t n) { return F.from_int(n); };
    return Mat4{{{i(1), 0, 0, 0},
                 {0, i(1), p.u.v, 0},
                 {0, 0, i(1), 0},
                 {0, p.v.v, i(1), i(1)}}};
}

Mat4 phi_basis_matrix(const FieldSpec& F, const Level2Params& p) {
    auto i = [&](std::int64_t n) { return F.from_int(n); };
    return Mat4{{{i(1), 0, 0, 0},
                 {0, i(1), 0, 0},
                 {0, 0, i(1), 0},
                 {i(-1), F.neg(p.c_u1.v), p.v.v, i(1)}}};
}

Mat4 phi_basis_matrix_char2(const FieldSpec& F, const Level2Params& p) {
    if (F.characteristic() != 2) throw UnsupportedError("char-2 transform");
    auto i = [&](std::int64_t n) { return F.from_int(n); };
    return Mat4{{{i(1), 0, 0, 0},
                 {0, i(1), 0, 0},
                 {0, 0, i(1), 0},
                 {0, p.u.v, p.v.v, i(1)}}};
}

std::uint64_t det4(const FieldSpec& F, const Mat4& M) {
    Mat4 A = M;
    std::uint64_t det = F.from_int(1);
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (A[r][col] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(A[piv], A[col]);
            det = F.neg(det);
        }
        det = F.mul(det, A[col][col]);
        std::uint64_t inv = F.inv(A[col][col]);
        for (int r = col + 1; r < 4; ++r) {
            if (A[r][col] == 0) continue;
            std::uint64_t f = F.mul(A[r][col], inv);
            for (int cc = col; cc < 4; ++cc) A[r][cc] = F.sub(A[r][cc], F.mul(f, A[col][cc]));
        }
    }
    return det;
}

} // namespace ecarith::quartic
