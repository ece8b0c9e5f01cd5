#include "ecarith/wmodel.hpp"

#include <algorithm>

#include "ecarith/errors.hpp"

namespace ecarith::wmodel {

namespace {

std::uint64_t rhs_at(const WeierstrassCurve& c, std::uint64_t x) {
    const FieldSpec& F = *c.F;
    std::uint64_t x2 = F.mul(x, x);
    std::uint64_t r = F.mul(x2, x);
    r = F.add(r, F.mul(c.a2, x2));
    r = F.add(r, F.mul(c.a4, x));
    return F.add(r, c.a6);
}

} // namespace

std::uint64_t discriminant(const WeierstrassCurve& c) {
    const FieldSpec& F = *c.F;
    std::uint64_t b2 = F.add(F.mul(c.a1, c.a1), F.mul(F.from_int(4), c.a2));
    std::uint64_t b4 = F.add(F.mul(F.from_int(2), c.a4), F.mul(c.a1, c.a3));
    std::uint64_t b6 = F.add(F.mul(c.a3, c.a3), F.mul(F.from_int(4), c.a6));
    std::uint64_t b8 = F.mul(F.mul(c.a1, c.a1), c.a6);
    b8 = F.add(b8, F.mul(F.from_int(4), F.mul(c.a2, c.a6)));
    b8 = F.sub(b8, F.mul(c.a1, F.mul(c.a3, c.a4)));
    b8 = F.add(b8, F.mul(c.a2, F.mul(c.a3, c.a3)));
    b8 = F.sub(b8, F.mul(c.a4, c.a4));
    std::uint64_t d = F.neg(F.mul(F.mul(b2, b2), b8));
    d = F.sub(d, F.mul(F.from_int(8), F.mul(b4, F.mul(b4, b4))));
    d = F.sub(d, F.mul(F.from_int(27), F.mul(b6, b6)));
    d = F.add(d, F.mul(F.from_int(9), F.mul(b2, F.mul(b4, b6))));
    return d;
}

WeierstrassCurve make_curve(const FieldSpec& F, std::uint64_t a1, std::uint64_t a2,
                            std::uint64_t a3, std::uint64_t a4, std::uint64_t a6) {
    WeierstrassCurve c{&F, a1, a2, a3, a4, a6};
    if (discriminant(c) == 0) throw SingularCurveError("vanishing discriminant");
    return c;
}

std::uint64_t level2_discriminant(const FieldSpec& F, std::uint64_t u, std::uint64_t v) {
    std::uint64_t a1 = F.add(F.mul(F.from_int(4), u), F.from_int(1));
    std::uint64_t t = F.sub(F.mul(a1, a1), F.mul(F.from_int(64), v));
    return F.mul(F.mul(v, v), t);
}

WeierstrassCurve e1_from_params(const FieldSpec& F, std::uint64_t u, std::uint64_t v) {
    if (level2_discriminant(F, u, v) == 0)
        throw SingularCurveError("level-2 family discriminant vanishes");
    return WeierstrassCurve{&F, F.from_int(1), u, 0, F.neg(v), 0};
}

WeierstrassCurve e2_from_params(const FieldSpec& F, std::uint64_t u, std::uint64_t v) {
    if (level2_discriminant(F, u, v) == 0)
        throw SingularCurveError("level-2 family discriminant vanishes");
    std::uint64_t a1 = F.add(F.mul(F.from_int(4), u), F.from_int(1));
    return WeierstrassCurve{&F, F.from_int(1), u, 0, F.mul(F.from_int(4), v), F.mul(a1, v)};
}

bool on_curve(const WeierstrassCurve& c, const PointW& P) {
    if (P.inf) return true;
    const FieldSpec& F = *c.F;
    std::uint64_t lhs = F.mul(P.y, P.y);
    lhs = F.add(lhs, F.mul(c.a1, F.mul(P.x, P.y)));
    lhs = F.add(lhs, F.mul(c.a3, P.y));
    return lhs == rhs_at(c, P.x);
}

PointW neg(const WeierstrassCurve& c, const PointW& P) {
    if (P.inf) return P;
    const FieldSpec& F = *c.F;
    return PointW::affine(P.x, F.sub(F.sub(F.neg(P.y), F.mul(c.a1, P.x)), c.a3));
}

PointW add(const WeierstrassCurve& c, const PointW& P, const PointW& Q) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    const FieldSpec& F = *c.F;
    std::uint64_t lam;
    if (P.x == Q.x) {
        // Q == -P?
        std::uint64_t negy = F.sub(F.sub(F.neg(P.y), F.mul(c.a1, P.x)), c.a3);
        if (Q.y == negy) return PointW::infinity();
        // tangent: (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3)
        std::uint64_t den = F.add(F.add(F.mul(F.from_int(2), P.y), F.mul(c.a1, P.x)), c.a3);
        if (den == 0) throw ContractViolationError("tangent undefined (singular point?)");
        std::uint64_t num = F.mul(F.from_int(3), F.mul(P.x, P.x));
        num = F.add(num, F.mul(F.from_int(2), F.mul(c.a2, P.x)));
        num = F.add(num, c.a4);
        num = F.sub(num, F.mul(c.a1, P.y));
        lam = F.div(num, den);
    } else {
        lam = F.div(F.sub(Q.y, P.y), F.sub(Q.x, P.x));
    }
    std::uint64_t x3 = F.add(F.mul(lam, lam), F.mul(c.a1, lam));
    x3 = F.sub(F.sub(F.sub(x3, c.a2), P.x), Q.x);
    std::uint64_t y3 = F.mul(lam, F.sub(P.x, x3));
    y3 = F.sub(F.sub(F.sub(y3, P.y), F.mul(c.a1, x3)), c.a3);
    return PointW::affine(x3, y3);
}

PointW scalar_mul(const WeierstrassCurve& c, std::uint64_t k, const PointW& P) {
    PointW R = PointW::infinity();
    PointW B = P;
    while (k) {
        if (k & 1) R = add(c, R, B);
        k >>= 1;
        if (k) B = add(c, B, B);
    }
    return R;
}

std::uint64_t point_order(const WeierstrassCurve& c, const PointW& P) {
    std::uint64_t n = 1;
    PointW R = P;
    while (!R.inf) {
        R = add(c, R, P);
        ++n;
        if (n > (1ULL << 40)) throw InternalInvariantError("order loop runaway");
    }
    return n;
}

bool is_smooth_point(const WeierstrassCurve& c, const PointW& P) {
    if (P.inf) return true;
    const FieldSpec& F = *c.F;
    // dF/dy = 2y + a1 x + a3 ; dF/dx = a1 y - 3x^2 - 2 a2 x - a4
    std::uint64_t dy = F.add(F.add(F.mul(F.from_int(2), P.y), F.mul(c.a1, P.x)), c.a3);
    std::uint64_t dx = F.mul(c.a1, P.y);
    dx = F.sub(dx, F.mul(F.from_int(3), F.mul(P.x, P.x)));
    dx = F.sub(dx, F.mul(F.from_int(2), F.mul(c.a2, P.x)));
    dx = F.sub(dx, c.a4);
    return dy != 0 || dx != 0;
}

std::pair<std::uint64_t, std::uint64_t>
velu_quotient_params(const FieldSpec& F, std::uint64_t a, std::uint64_t b) {
    if (F.characteristic() == 2)
        throw UnsupportedError("velu_quotient_params needs characteristic != 2");
    if (F.mul(b, F.sub(F.mul(a, a), F.mul(F.from_int(4), b))) == 0)
        throw SingularCurveError("y^2 = x^3 + ax^2 + bx is singular");
    return {F.neg(F.mul(F.from_int(2), a)), F.sub(F.mul(a, a), F.mul(F.from_int(4), b))};
}

std::vector<PointW> enumerate_points(const WeierstrassCurve& c) {
    const FieldSpec& F = *c.F;
    if (F.kind() != FieldKind::OddPrime)
        throw RefusalError("enumeration is implemented for odd prime fields");
    if (F.modulus() > 10000) throw RefusalError("field too large for enumeration");
    std::vector<PointW> pts;
    pts.push_back(PointW::infinity());
    for (std::uint64_t x = 0; x < F.modulus(); ++x) {
        // y^2 + (a1 x + a3) y - rhs = 0  =>  (y + b/2)^2 = rhs + b^2/4
        std::uint64_t b = F.add(F.mul(c.a1, x), c.a3);
        std::uint64_t half = F.inv(F.from_int(2));
        std::uint64_t shift = F.mul(b, half);
        std::uint64_t target = F.add(rhs_at(c, x), F.mul(shift, shift));
        auto r = F.sqrt(target);
        if (!r) continue;
        std::uint64_t y0 = F.sub(*r, shift);
        pts.push_back(PointW::affine(x, y0));
        std::uint64_t y1 = F.sub(F.neg(*r), shift);
        if (y1 != y0) pts.push_back(PointW::affine(x, y1));
    }
    return pts;
}

PointW sample_point(const WeierstrassCurve& c, RngStream& rng) {
    const FieldSpec& F = *c.F;
    for (int tries = 0; tries < 4096; ++tries) {
        std::uint64_t x = F.sample(rng);
        PointW P;
        if (F.kind() == FieldKind::OddPrime) {
            std::uint64_t b = F.add(F.mul(c.a1, x), c.a3);
            std::uint64_t shift = F.mul(b, F.inv(F.from_int(2)));
            std::uint64_t target = F.add(rhs_at(c, x), F.mul(shift, shift));
            auto r = F.sqrt(target);
            if (!r) continue;
            std::uint64_t y = (rng.next() & 1) ? F.sub(F.neg(*r), shift) : F.sub(*r, shift);
            P = PointW::affine(x, y);
        } else {
            // char 2, desk-scale fields: scan y
            std::uint64_t rhs = rhs_at(c, x), b = F.add(F.mul(c.a1, x), c.a3);
            std::uint64_t found = F.order();
            for (std::uint64_t y = 0; y < F.order(); ++y) {
                if (F.add(F.mul(y, y), F.mul(b, y)) == rhs) { found = y; break; }
            }
            if (found == F.order()) continue;
            P = PointW::affine(x, found);
        }
        if (is_smooth_point(c, P)) return P;
    }
    throw InternalInvariantError("sample_point: no smooth point found");
}

// ---------------------------------------------------------------------------
// 2-isogeny composites through the scaled b-form (char != 2)

namespace {

struct BForm {
    std::uint64_t A, B;
};

// E1/E2 <-> Y^2 = X^3 + A X^2 + B X with A = 4u+1, B = -16v via
// (x, y) -> (4x, 8y + 4x).
PointW to_bform(const FieldSpec& F, const PointW& P) {
    if (P.inf) return P;
    return PointW::affine(F.mul(F.from_int(4), P.x),
                          F.add(F.mul(F.from_int(8), P.y), F.mul(F.from_int(4), P.x)));
}

PointW from_bform(const FieldSpec& F, const PointW& P) {
    if (P.inf) return P;
    std::uint64_t x = F.div(P.x, F.from_int(4));
    std::uint64_t y = F.div(F.sub(P.y, P.x), F.from_int(8));
    return PointW::affine(x, y);
}

// quotient of Y^2 = X^3 + A X^2 + B X by <(0,0)>, landing on (-2A, A^2-4B)
PointW velu_map(const FieldSpec& F, const BForm& c, const PointW& P) {
    if (P.inf || P.x == 0) return PointW::infinity();
    std::uint64_t ix2 = F.inv(F.mul(P.x, P.x));
    std::uint64_t X = F.mul(F.mul(P.y, P.y), ix2);
    std::uint64_t Y = F.mul(F.mul(P.y, F.sub(F.mul(P.x, P.x), c.B)), ix2);
    return PointW::affine(X, Y);
}

} // namespace

PointW velu_e1_to_e2(const FieldSpec& F, std::uint64_t u, std::uint64_t v, const PointW& P) {
    if (F.characteristic() == 2) throw UnsupportedError("char-2 velu composite not provided");
    if (P.inf) return P;
    std::uint64_t A = F.add(F.mul(F.from_int(4), u), F.from_int(1));
    std::uint64_t B = F.neg(F.mul(F.from_int(16), v));
    PointW Pb = to_bform(F, P);
    PointW Q = velu_map(F, BForm{A, B}, Pb);
    if (Q.inf) return Q;
    Q.x = F.sub(Q.x, A);  // translate onto Y^2 = X^3 + AX^2 - 4BX - 4AB
    return from_bform(F, Q);
}

PointW velu_e2_to_e1(const FieldSpec& F, std::uint64_t u, std::uint64_t v, const PointW& P) {
    if (F.characteristic() == 2) throw UnsupportedError("char-2 velu composite not provided");
    if (P.inf) return P;
    std::uint64_t A = F.add(F.mul(F.from_int(4), u), F.from_int(1));
    std::uint64_t B = F.neg(F.mul(F.from_int(16), v));
    PointW Pb = to_bform(F, P);
    Pb.x = F.add(Pb.x, A);  // onto Y^2 = X^3 - 2AX^2 + (A^2-4B)X
    std::uint64_t A2 = F.neg(F.mul(F.from_int(2), A));
    std::uint64_t B2 = F.sub(F.mul(A, A), F.mul(F.from_int(4), B));
    PointW Q = velu_map(F, BForm{A2, B2}, Pb);
    if (Q.inf) return Q;
    // image lies on (4A, 16B); scale back to (A, B), then to E1 coordinates
    Q.x = F.div(Q.x, F.from_int(4));
    Q.y = F.div(Q.y, F.from_int(8));
    return from_bform(F, Q);
}

// ---------------------------------------------------------------------------
// degree-3 example isogeny

bool on_example_domain(const FieldSpec& F, std::uint64_t a, std::uint64_t b, const RawP2& P) {
    auto [X, Y, Z] = P;
    std::uint64_t lhs = F.mul(F.mul(Y, Y), Z);
    std::uint64_t q = F.add(F.mul(X, X), F.add(F.mul(a, F.mul(X, Z)), F.mul(b, F.mul(Z, Z))));
    return lhs == F.mul(X, q);
}

bool on_example_codomain(const FieldSpec& F, std::uint64_t a, std::uint64_t b, const RawP2& P) {
    auto [X, Y, Z] = P;
    std::uint64_t lhs = F.mul(F.mul(Y, Y), Z);
    std::uint64_t t = F.sub(X, F.mul(a, Z));
    std::uint64_t q = F.sub(F.mul(t, t), F.mul(F.from_int(4), F.mul(b, F.mul(Z, Z))));
    return lhs == F.mul(X, q);
}

bool rawp2_proj_eq(const FieldSpec& F, const RawP2& A, const RawP2& B) {
    bool za = A[0] == 0 && A[1] == 0 && A[2] == 0;
    bool zb = B[0] == 0 && B[1] == 0 && B[2] == 0;
    if (za || zb) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (F.mul(A[i], B[j]) != F.mul(A[j], B[i])) return false;
    return true;
}

std::array<RawP2, 3> example_isogeny_tuples(const FieldSpec& F, std::uint64_t a,
                                            std::uint64_t b, const RawP2& P) {
    auto [X, Y, Z] = P;
    std::uint64_t X2 = F.mul(X, X), Y2 = F.mul(Y, Y), Z2 = F.mul(Z, Z);
    std::uint64_t XZ = F.mul(X, Z);
    std::uint64_t q = F.add(X2, F.add(F.mul(a, XZ), F.mul(b, Z2)));  // X^2+aXZ+bZ^2
    RawP2 t1 = {F.mul(Y2, Z), F.mul(F.sub(X2, F.mul(b, Z2)), Y), F.mul(X2, Z)};
    std::uint64_t XaZ = F.add(X, F.mul(a, Z));
    RawP2 t2 = {F.mul(XaZ, Y2),
                F.mul(F.sub(Y2, F.add(F.mul(F.from_int(2), F.mul(b, XZ)),
                                      F.mul(a, F.mul(b, Z2)))), Y),
                F.mul(X2, XaZ)};
    RawP2 t3 = {F.mul(q, Y), F.sub(F.mul(X, Y2), F.mul(b, F.mul(q, Z))), F.mul(X, F.mul(Y, Z))};
    return {t1, t2, t3};
}

RawP2 example_isogeny_eval(const FieldSpec& F, std::uint64_t a, std::uint64_t b, const RawP2& P) {
    auto ts = example_isogeny_tuples(F, a, b, P);
    auto nonzero = [](const RawP2& t) { return t[0] != 0 || t[1] != 0 || t[2] != 0; };
    const RawP2* first = nullptr;
    for (const auto& t : ts) {
        if (!nonzero(t)) continue;
        if (!first) {
            first = &t;
        } else if (!rawp2_proj_eq(F, *first, t)) {
            throw InternalInvariantError("isogeny tuples disagree");
        }
    }
    if (!first) throw InternalInvariantError("completeness violation: all tuples vanish");
    return *first;
}

std::vector<RawP2> enumerate_example_domain(const FieldSpec& F, std::uint64_t a, std::uint64_t b) {
    if (F.kind() != FieldKind::OddPrime || F.modulus() > 10000)
        throw RefusalError("enumeration limited to odd prime fields, p <= 10^4");
    std::vector<RawP2> out;
    out.push_back({0, F.from_int(1), 0});
    for (std::uint64_t x = 0; x < F.modulus(); ++x)
        for (std::uint64_t y = 0; y < F.modulus(); ++y)
            if (on_example_domain(F, a, b, {x, y, 1})) out.push_back({x, y, 1});
    return out;
}

// ---------------------------------------------------------------------------
// exactness predicate

bool exactness_check(const WeierstrassCurve& c, const KernelSpec& ks) {
    bool has_o = false;
    for (const auto& Q : ks.G) {
        if (!on_curve(c, Q)) throw ContractViolationError("kernel point off curve");
        if (Q.inf) has_o = true;
    }
    if (!has_o) throw ContractViolationError("G must contain O");
    auto member = [&](const PointW& P) {
        return std::find(ks.G.begin(), ks.G.end(), P) != ks.G.end();
    };
    for (const auto& P : ks.G)
        for (const auto& Q : ks.G)
            if (!member(add(c, P, Q))) throw ContractViolationError("G not closed under +");
    if (!on_curve(c, ks.T1) || !on_curve(c, ks.S1))
        throw ContractViolationError("T1/S1 off curve");

    PointW lhs = scalar_mul(c, ks.n, add(c, ks.T1, neg(c, ks.S1)));
    PointW sum = PointW::infinity();
    for (const auto& Q : ks.G) sum = add(c, sum, Q);
    PointW rhs = scalar_mul(c, ks.d, sum);
    return lhs == rhs;
}

} // namespace ecarith::wmodel
