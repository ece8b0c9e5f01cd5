#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ecarith/ffield.hpp"
#include "ecarith/rng.hpp"

namespace ecarith::wmodel {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F.
///
/// This is the oracle model: affine chord-tangent arithmetic with inversions,
/// deliberately independent of every projective formula it is used to check.
/// Nothing here touches an operation counter.
struct WeierstrassCurve {
    const FieldSpec* F = nullptr;
    std::uint64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
};

struct PointW {
    bool inf = true;
    std::uint64_t x = 0, y = 0;

    static PointW infinity() { return PointW{}; }
    static PointW affine(std::uint64_t x, std::uint64_t y) { return PointW{false, x, y}; }
};

inline bool operator==(const PointW& a, const PointW& b) {
    if (a.inf || b.inf) return a.inf && b.inf;
    return a.x == b.x && a.y == b.y;
}
inline bool operator!=(const PointW& a, const PointW& b) { return !(a == b); }

/// Standard b2/b4/b6/b8 discriminant.
std::uint64_t discriminant(const WeierstrassCurve& c);

/// General constructor; rejects vanishing standard discriminant.
WeierstrassCurve make_curve(const FieldSpec& F, std::uint64_t a1, std::uint64_t a2,
                            std::uint64_t a3, std::uint64_t a4, std::uint64_t a6);

/// Family discriminant v^2((4u+1)^2 - 64v) used as the validity gate for the
/// level-2 family (the published formula; see ledger for the sign analysis).
std::uint64_t level2_discriminant(const FieldSpec& F, std::uint64_t u, std::uint64_t v);

/// E1: y^2 + xy = x^3 + u x^2 - v x.
WeierstrassCurve e1_from_params(const FieldSpec& F, std::uint64_t u, std::uint64_t v);
/// E2: y^2 + xy = x^3 + u x^2 + 4v x + (4u+1)v.
WeierstrassCurve e2_from_params(const FieldSpec& F, std::uint64_t u, std::uint64_t v);

bool on_curve(const WeierstrassCurve& c, const PointW& P);
PointW neg(const WeierstrassCurve& c, const PointW& P);
PointW add(const WeierstrassCurve& c, const PointW& P, const PointW& Q);
PointW scalar_mul(const WeierstrassCurve& c, std::uint64_t k, const PointW& P);
std::uint64_t point_order(const WeierstrassCurve& c, const PointW& P);

/// False exactly at points where both partial derivatives vanish.
bool is_smooth_point(const WeierstrassCurve& c, const PointW& P);

/// Quotient parameters of y^2 = x^3 + a x^2 + b x by <(0,0)>: (-2a, a^2-4b).
std::pair<std::uint64_t, std::uint64_t>
velu_quotient_params(const FieldSpec& F, std::uint64_t a, std::uint64_t b);

/// All points (including O) by x-scan; odd prime fields with p <= 10^4.
std::vector<PointW> enumerate_points(const WeierstrassCurve& c);

/// Seeded uniform-ish point: random x, solve for y. Skips singular points.
PointW sample_point(const WeierstrassCurve& c, RngStream& rng);

/// The 2-isogeny E1 -> E2 with kernel <(0,0)> and its dual, evaluated through
/// the scaled b-form and the classical quotient map (char != 2).
PointW velu_e1_to_e2(const FieldSpec& F, std::uint64_t u, std::uint64_t v, const PointW& P);
PointW velu_e2_to_e1(const FieldSpec& F, std::uint64_t u, std::uint64_t v, const PointW& P);

// --- degree-3 isogeny tuples on Y^2 Z = X(X^2 + aXZ + bZ^2) ----------------

using RawP2 = std::array<std::uint64_t, 3>;

bool on_example_domain(const FieldSpec& F, std::uint64_t a, std::uint64_t b, const RawP2& P);
bool on_example_codomain(const FieldSpec& F, std::uint64_t a, std::uint64_t b, const RawP2& P);
bool rawp2_proj_eq(const FieldSpec& F, const RawP2& A, const RawP2& B);

/// The three degree-3 defining tuples of the quotient by <(0:0:1)>.
std::array<RawP2, 3> example_isogeny_tuples(const FieldSpec& F, std::uint64_t a,
                                            std::uint64_t b, const RawP2& P);

/// Common projective image of the nonvanishing tuples; asserts agreement and
/// that at least one tuple is nonzero (the system is complete).
RawP2 example_isogeny_eval(const FieldSpec& F, std::uint64_t a, std::uint64_t b, const RawP2& P);

std::vector<RawP2> enumerate_example_domain(const FieldSpec& F, std::uint64_t a, std::uint64_t b);

// --- exactness predicate -----------------------------------------------------

/// Data of an isogeny between degree-d models: kernel G, isogeny degree n,
/// embedding-class points T1 and S1 (a preimage of the codomain class).
struct KernelSpec {
    std::vector<PointW> G;
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    PointW T1, S1;
};

/// Whether [n](T1 - S1) = [d](sum of G) in the oracle group.
bool exactness_check(const WeierstrassCurve& c, const KernelSpec& ks);

} // namespace ecarith::wmodel
