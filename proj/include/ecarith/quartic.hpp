#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "ecarith/ffield.hpp"
#include "ecarith/proj.hpp"
#include "ecarith/wmodel.hpp"

namespace ecarith::quartic {

enum class QModel { Q1, Q2 };
enum class PhiD1Mode { Generic, Twist };

/// Point of P^3 on one of the level-2 quartic models
///   Q1: X3^2 + X1 X3 = (X0 + u X1 - v X2) X1,  X1^2 = X0 X2
///   Q2: X3^2 + X1 X3 = (X0 + 4v X2)(X1 + u X2) + v X2^2,  X1^2 = X0 X2
/// with identity (1:0:0:0).
struct QuarticPoint {
    Proj4 P;
    QModel model = QModel::Q1;
};

/// Point of the singular plane quartic
///   D1: (Y^2 - (4u+1) X Z)^2 = 16 X Z (X - v Z)^2.
struct D1Point {
    Proj3 P;
};

/// Family parameters. Construction validates the family discriminant
/// v^2((4u+1)^2 - 64v) != 0, computes v^{-1} once (the single amortized
/// inversion), optionally derives the twist parameter s with
/// (2s+1)^2 = -(4u+1), and registers every constant the formulas multiply by.
struct Level2Params {
    Fe u, v, v_inv;
    std::optional<Fe> s;

    // registered derived constants
    Fe a1;       // 4u + 1
    Fe four_v;   // 4v
    Fe a1v;      // (4u+1) v
    Fe c_u1;     // u + 1
    Fe c_2u1;    // 2u + 1
    Fe c_fold;   // 2(1 - 2(u+v))
    Fe c_ratio;  // (4u+1) / (4v)
    Fe s21;      // 2s + 1 (twist only)

    bool has_twist() const { return s.has_value(); }
};

Level2Params create(CountingContext& ctx, std::uint64_t u, std::uint64_t v,
                    bool derive_twist = true);

/// s with (2s+1)^2 = -(4u+1), deterministic root choice; absent when
/// -(4u+1) is a non-square or zero.
std::optional<Fe> twist_parameter(CountingContext& ctx, std::uint64_t u);

bool on_model(const FieldSpec& F, const Level2Params& p, const QuarticPoint& P);
bool on_d1(const FieldSpec& F, const Level2Params& p, const D1Point& P);
bool is_d1_singular(const FieldSpec& F, const Level2Params& p, const D1Point& P);

QuarticPoint identity(const CountingContext& ctx, QModel model);

/// (x, y) -> (x^2 : x : 1 : y), O -> (1:0:0:0). Oracle-boundary plumbing,
/// uncounted; rejects off-curve input.
QuarticPoint embed(const CountingContext& ctx, const Level2Params& p, QModel model,
                   const wmodel::PointW& P);

/// Left inverse of embed (normalizes X2 = 1); uncounted.
wmodel::PointW lift(const CountingContext& ctx, const Level2Params& p, const QuarticPoint& P);

wmodel::WeierstrassCurve weierstrass_of(const FieldSpec& F, const Level2Params& p, QModel model);

/// 2-isogeny Q1 -> Q2, kernel <(0:0:1:0)>, defining polynomials as printed.
QuarticPoint psi_raw(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P);

/// Square-form evaluation: 4S when char != 2 (emits the 4-scaled
/// representative of the determinant-32 normalization), 2M + 2S in char 2.
QuarticPoint psi_fast(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P);

/// Dual 2-isogeny Q2 -> Q1, defining polynomials as printed.
QuarticPoint phi_raw(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P);

/// Square-form evaluation, 4S over any field.
QuarticPoint phi_fast(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P);

/// [2] as the isogeny composite: 8S (char != 2), 2M + 6S (char 2).
QuarticPoint double_q(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P);

/// Translation by T = (0:0:1:0) on Q1: (vX2 : -X1 : v^{-1}X0 : X1+X3).
QuarticPoint tau_translate(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P);

/// [-1] on Q1: (X0 : X1 : X2 : -(X1+X3)).
QuarticPoint negate_q1(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P);

/// Q1 -> D1, (X0 : X1 + 2X3 : X2); char != 2.
D1Point project_d1(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P);

/// D1 -> Q2 through the four squares (X-vZ)^2, Y^2, (X+vZ)^2, (X+Y+vZ)^2;
/// 4S. Rejects the (at most two) singular points of D1.
QuarticPoint psi_d1(CountingContext& ctx, const Level2Params& p, const D1Point& P);

/// Q2 -> D1: 1M + 2S generic, 3S in twist mode (requires s).
D1Point phi_d1(CountingContext& ctx, const Level2Params& p, const QuarticPoint& P,
               PhiD1Mode mode);

/// [2] on Q2 through D1: 1M + 6S generic, 7S twist.
QuarticPoint double_q2_fast(CountingContext& ctx, const Level2Params& p,
                            const QuarticPoint& P, PhiD1Mode mode);

/// True iff (4u+1)v is a non-square, i.e. D1 has no rational singular point.
bool d1_singular_locus_check(const FieldSpec& F, const Level2Params& p);

/// Double-and-add on Q2: doublings via double_q2_fast, additions through the
/// oracle (lift, chord-tangent add, embed) and excluded from counted cost.
QuarticPoint scalar_mul_base2(CountingContext& ctx, const Level2Params& p, std::uint64_t k,
                              const QuarticPoint& P, PhiD1Mode mode);

// --- basis-change certificates ----------------------------------------------

using Mat4 = std::array<std::array<std::uint64_t, 4>, 4>;

/// Solved transformation matrices from the square forms (g) to the defining
/// polynomials (f), in the normalization whose determinant the text quotes.
Mat4 psi_basis_matrix(const FieldSpec& F, const Level2Params& p);        // det 32 (char != 2)
Mat4 psi_basis_matrix_char2(const FieldSpec& F, const Level2Params& p);  // det 1
Mat4 phi_basis_matrix(const FieldSpec& F, const Level2Params& p);        // det 1
Mat4 phi_basis_matrix_char2(const FieldSpec& F, const Level2Params& p);  // det 1

std::uint64_t det4(const FieldSpec& F, const Mat4& M);

} // namespace ecarith::quartic
