#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "ecarith/errors.hpp"
#include "ecarith/rng.hpp"

namespace ecarith {

enum class FieldKind { OddPrime, Binary };

/// Field description plus raw (uncounted) arithmetic on canonical
/// representatives. Odd prime fields F_p (p >= 5, p < 2^63) hold values in
/// [0, p); binary fields F_{2^k} (2 <= k <= 16) hold k-bit polynomials over
/// F_2 reduced by a fixed published irreducible polynomial.
///
/// Instrumented arithmetic lives in CountingContext; the raw layer here is
/// for oracle code and verification plumbing whose cost must never pollute
/// the counters.
class FieldSpec {
public:
    static FieldSpec odd_prime(std::uint64_t p);
    static FieldSpec binary(unsigned k);

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint32_t reduction_poly() const { return poly_; }
    std::uint64_t order() const;
    std::uint64_t characteristic() const { return kind_ == FieldKind::Binary ? 2 : p_; }

    bool operator==(const FieldSpec& o) const {
        return kind_ == o.kind_ && p_ == o.p_ && k_ == o.k_ && poly_ == o.poly_;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sqr(std::uint64_t a) const { return mul(a, a); }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;  // throws DivisionByZeroError on 0
    std::uint64_t div(std::uint64_t a, std::uint64_t b) const { return mul(a, inv(b)); }

    /// Signed-integer embedding through the prime subfield.
    std::uint64_t from_int(std::int64_t n) const;

    bool is_square(std::uint64_t a) const;                  // odd prime only
    std::optional<std::uint64_t> sqrt(std::uint64_t a) const;  // smaller root of +-r
    std::optional<std::uint64_t> cube_root_of_unity() const;   // smallest primitive one

    std::uint64_t sample(RngStream& rng) const;  // uniform by rejection

    std::string describe() const;

private:
    FieldSpec() = default;
    FieldKind kind_ = FieldKind::OddPrime;
    std::uint64_t p_ = 0;   // odd prime kind
    unsigned k_ = 0;        // binary kind
    std::uint32_t poly_ = 0;
};

/// Fixed irreducible polynomial for F_{2^k} (lowest-weight, lowest-value;
/// k=8 is x^8+x^4+x^3+x+1). Bit i is the coefficient of x^i.
std::uint32_t binary_reduction_poly(unsigned k);

bool is_prime_u64(std::uint64_t n);
bool is_irreducible_gf2(std::uint32_t poly);

/// Canonical field element: reduced value plus the field it lives in.
/// Elements of distinct fields never combine (SpecMismatchError).
struct Fe {
    std::uint64_t v = 0;
    const FieldSpec* spec = nullptr;
};

inline bool operator==(const Fe& a, const Fe& b) {
    return a.spec && b.spec && *a.spec == *b.spec && a.v == b.v;
}
inline bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }

/// Per-context operation counts. M: general multiplications, S: squarings,
/// m: multiplications by registered constants, I: inversions, A: additions /
/// subtractions / negations (including small-integer scalings).
struct OpCounter {
    std::uint64_t M = 0, S = 0, m = 0, I = 0, A = 0;

    OpCounter delta(const OpCounter& earlier) const {
        return {M - earlier.M, S - earlier.S, m - earlier.m, I - earlier.I, A - earlier.A};
    }
    bool operator==(const OpCounter& o) const {
        return M == o.M && S == o.S && m == o.m && I == o.I && A == o.A;
    }
};

/// Arithmetic with exact operation counting. Squaring bumps S only, general
/// multiplication M only, registered-constant multiplication m only; the
/// class of an operation is syntactic, never value dependent (x*1 is still
/// 1M through mul, 1m through mul_const).
///
/// One context per activity; contexts are independent and share nothing.
class CountingContext {
public:
    explicit CountingContext(const FieldSpec& spec) : spec_(spec) {}

    const FieldSpec& field() const { return spec_; }

    Fe fe(std::uint64_t v) const;
    Fe from_int(std::int64_t n) const { return fe(spec_.from_int(n)); }
    Fe zero() const { return fe(0); }
    Fe one() const { return fe(spec_.from_int(1)); }

    /// Declares c a "small constant" (curve parameter or fixed value); only
    /// registered constants may go through mul_const.
    Fe register_constant(Fe c);
    Fe register_constant_int(std::int64_t n) { return register_constant(from_int(n)); }
    bool is_registered(Fe c) const;

    Fe add(Fe a, Fe b);        // A += 1
    Fe sub(Fe a, Fe b);        // A += 1
    Fe neg(Fe a);              // A += 1
    Fe mul(Fe a, Fe b);        // M += 1
    Fe square(Fe a);           // S += 1
    Fe mul_const(Fe c, Fe a);  // m += 1; c must be registered
    Fe inv(Fe a);              // I += 1

    /// n*a for small non-negative n by doubling/adding; counts only A.
    Fe small_mul(unsigned n, Fe a);

    /// Plumbing (uncounted): deterministic square root and cube root of unity.
    std::optional<Fe> sqrt(Fe a) const;
    std::optional<Fe> cube_root_of_unity() const;

    Fe sample_uniform(RngStream& rng) const { return fe(spec_.sample(rng)); }

    const OpCounter& counter() const { return counter_; }
    OpCounter snapshot_and_reset();

    void expect(Fe a) const;  // SpecMismatchError unless a belongs here

private:
    FieldSpec spec_;
    OpCounter counter_;
    std::set<std::uint64_t> constants_;
};

} // namespace ecarith
