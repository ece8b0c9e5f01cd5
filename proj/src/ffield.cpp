#include "ecarith/ffield.hpp"

#include <array>

namespace ecarith {

// ---------------------------------------------------------------------------
// primality / irreducibility

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

unsigned gf2_deg(std::uint64_t p) {
    unsigned d = 0;
    while (p >> 1) { p >>= 1; ++d; }
    return d;
}

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t m) {
    const unsigned dm = gf2_deg(m);
    while (a && gf2_deg(a) >= dm) a ^= m << (gf2_deg(a) - dm);
    return a;
}

std::uint64_t gf2_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) { auto t = gf2_mod(a, b); a = b; b = t; }
    return a;
}

std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t poly, unsigned k) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> k) & 1) a ^= poly;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    // deterministic Miller-Rabin base set for 64-bit inputs
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

bool is_irreducible_gf2(std::uint32_t poly) {
    const unsigned k = gf2_deg(poly);
    if (k == 0) return false;
    auto xpow2e = [&](unsigned e) {
        std::uint64_t r = 2;  // x
        for (unsigned i = 0; i < e; ++i) r = gf2_mulmod(r, r, poly, k);
        return r;
    };
    if (xpow2e(k) != 2) return false;  // x^(2^k) == x
    unsigned q = k;
    for (unsigned d = 2; d * d <= q; ++d) {
        if (q % d) continue;
        while (q % d == 0) q /= d;
        if (gf2_gcd(poly, xpow2e(k / d) ^ 2ULL) != 1) return false;
    }
    if (q > 1 && q < k) {
        if (gf2_gcd(poly, xpow2e(k / q) ^ 2ULL) != 1) return false;
    } else if (q == k && k > 1) {
        if (gf2_gcd(poly, xpow2e(1) ^ 2ULL) != 1) return false;
    }
    return true;
}

std::uint32_t binary_reduction_poly(unsigned k) {
    static constexpr std::array<std::uint32_t, 17> table = {
        0, 0,
        0x7,     // x^2+x+1
        0xB,     // x^3+x+1
        0x13,    // x^4+x+1
        0x25,    // x^5+x^2+1
        0x43,    // x^6+x+1
        0x83,    // x^7+x+1
        0x11B,   // x^8+x^4+x^3+x+1
        0x203,   // x^9+x+1
        0x409,   // x^10+x^3+1
        0x805,   // x^11+x^2+1
        0x1009,  // x^12+x^3+1
        0x201B,  // x^13+x^4+x^3+x+1
        0x4021,  // x^14+x^5+1
        0x8003,  // x^15+x+1
        0x1002B, // x^16+x^5+x^3+x+1
    };
    if (k < 2 || k > 16) throw UnsupportedError("binary field degree must be in [2,16]");
    return table[k];
}

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::odd_prime(std::uint64_t p) {
    if (p < 5 || (p & 1) == 0 || !is_prime_u64(p))
        throw ContractViolationError("odd prime field needs prime p >= 5");
    if (p >= (1ULL << 63)) throw UnsupportedError("prime modulus must fit 63 bits");
    FieldSpec s;
    s.kind_ = FieldKind::OddPrime;
    s.p_ = p;
    return s;
}

FieldSpec FieldSpec::binary(unsigned k) {
    FieldSpec s;
    s.kind_ = FieldKind::Binary;
    s.k_ = k;
    s.poly_ = binary_reduction_poly(k);
    return s;
}

std::uint64_t FieldSpec::order() const {
    return kind_ == FieldKind::Binary ? (1ULL << k_) : p_;
}

std::uint64_t FieldSpec::add(std::uint64_t a, std::uint64_t b) const {
    if (kind_ == FieldKind::Binary) return a ^ b;
    std::uint64_t r = a + b;
    if (r >= p_) r -= p_;
    return r;
}

std::uint64_t FieldSpec::sub(std::uint64_t a, std::uint64_t b) const {
    if (kind_ == FieldKind::Binary) return a ^ b;
    return a >= b ? a - b : a + p_ - b;
}

std::uint64_t FieldSpec::neg(std::uint64_t a) const {
    if (kind_ == FieldKind::Binary) return a;
    return a == 0 ? 0 : p_ - a;
}

std::uint64_t FieldSpec::mul(std::uint64_t a, std::uint64_t b) const {
    if (kind_ == FieldKind::Binary) return gf2_mulmod(a, b, poly_, k_);
    return mulmod_u64(a, b, p_);
}

std::uint64_t FieldSpec::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = from_int(1);
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero");
    if (kind_ == FieldKind::Binary) return pow(a, (1ULL << k_) - 2);
    return powmod_u64(a, p_ - 2, p_);
}

std::uint64_t FieldSpec::from_int(std::int64_t n) const {
    if (kind_ == FieldKind::Binary) return static_cast<std::uint64_t>(n & 1);
    std::int64_t m = n % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(m);
}

bool FieldSpec::is_square(std::uint64_t a) const {
    if (kind_ == FieldKind::Binary) return true;  // Frobenius is surjective
    if (a == 0) return true;
    return powmod_u64(a, (p_ - 1) / 2, p_) == 1;
}

std::optional<std::uint64_t> FieldSpec::sqrt(std::uint64_t a) const {
    if (kind_ == FieldKind::Binary)
        throw UnsupportedError("sqrt is provided for odd prime fields only");
    if (a == 0) return 0;
    if (!is_square(a)) return std::nullopt;
    std::uint64_t r;
    if (p_ % 4 == 3) {
        r = powmod_u64(a, (p_ + 1) / 4, p_);
    } else {
        // Tonelli-Shanks with the smallest non-residue as generator
        std::uint64_t q = p_ - 1;
        unsigned s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        std::uint64_t z = 2;
        while (is_square(z)) ++z;
        std::uint64_t c = powmod_u64(z, q, p_);
        std::uint64_t t = powmod_u64(a, q, p_);
        r = powmod_u64(a, (q + 1) / 2, p_);
        unsigned m = s;
        while (t != 1) {
            std::uint64_t t2 = t;
            unsigned i = 0;
            while (t2 != 1) { t2 = mulmod_u64(t2, t2, p_); ++i; }
            std::uint64_t b = c;
            for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p_);
            m = i;
            c = mulmod_u64(b, b, p_);
            t = mulmod_u64(t, c, p_);
            r = mulmod_u64(r, b, p_);
        }
    }
    return std::min(r, p_ - r);
}

std::optional<std::uint64_t> FieldSpec::cube_root_of_unity() const {
    if (kind_ == FieldKind::Binary)
        throw UnsupportedError("cube_root_of_unity is for odd prime fields");
    if (p_ % 3 != 1) return std::nullopt;
    for (std::uint64_t b = 2;; ++b) {
        std::uint64_t w = powmod_u64(b, (p_ - 1) / 3, p_);
        if (w != 1) return std::min(w, mulmod_u64(w, w, p_));
    }
}

std::uint64_t FieldSpec::sample(RngStream& rng) const {
    if (kind_ == FieldKind::Binary) return rng.next() & ((1ULL << k_) - 1);
    const std::uint64_t limit = ~0ULL - (~0ULL % p_ + 1) % p_;  // multiple of p minus 1
    for (;;) {
        std::uint64_t u = rng.next();
        if (u <= limit) return u % p_;
    }
}

std::string FieldSpec::describe() const {
    if (kind_ == FieldKind::Binary) return "F_2^" + std::to_string(k_);
    return "F_" + std::to_string(p_);
}

// ---------------------------------------------------------------------------
// CountingContext

Fe CountingContext::fe(std::uint64_t v) const {
    if (v >= spec_.order()) throw ContractViolationError("value not in canonical form");
    return Fe{v, &spec_};
}

void CountingContext::expect(Fe a) const {
    if (!a.spec || *a.spec != spec_) throw SpecMismatchError("element from a different field");
}

Fe CountingContext::register_constant(Fe c) {
    expect(c);
    constants_.insert(c.v);
    return c;
}

bool CountingContext::is_registered(Fe c) const {
    return c.spec && *c.spec == spec_ && constants_.count(c.v) > 0;
}

Fe CountingContext::add(Fe a, Fe b) {
    expect(a); expect(b);
    counter_.A += 1;
    return Fe{spec_.add(a.v, b.v), &spec_};
}

Fe CountingContext::sub(Fe a, Fe b) {
    expect(a); expect(b);
    counter_.A += 1;
    return Fe{spec_.sub(a.v, b.v), &spec_};
}

Fe CountingContext::neg(Fe a) {
    expect(a);
    counter_.A += 1;
    return Fe{spec_.neg(a.v), &spec_};
}

Fe CountingContext::mul(Fe a, Fe b) {
    expect(a); expect(b);
    counter_.M += 1;
    return Fe{spec_.mul(a.v, b.v), &spec_};
}

Fe CountingContext::square(Fe a) {
    expect(a);
    counter_.S += 1;
    return Fe{spec_.mul(a.v, a.v), &spec_};
}

Fe CountingContext::mul_const(Fe c, Fe a) {
    expect(a);
    if (!is_registered(c)) throw ContractViolationError("mul_const with unregistered constant");
    counter_.m += 1;
    return Fe{spec_.mul(c.v, a.v), &spec_};
}

Fe CountingContext::inv(Fe a) {
    expect(a);
    counter_.I += 1;
    return Fe{spec_.inv(a.v), &spec_};
}

Fe CountingContext::small_mul(unsigned n, Fe a) {
    expect(a);
    if (n == 0) return zero();
    // left-to-right binary chain of doublings and adds, A per field addition
    Fe acc = a;
    unsigned top = 31 - static_cast<unsigned>(__builtin_clz(n));
    for (int i = static_cast<int>(top) - 1; i >= 0; --i) {
        acc = add(acc, acc);
        if ((n >> i) & 1) acc = add(acc, a);
    }
    return acc;
}

std::optional<Fe> CountingContext::sqrt(Fe a) const {
    expect(a);
    auto r = spec_.sqrt(a.v);
    if (!r) return std::nullopt;
    return fe(*r);
}

std::optional<Fe> CountingContext::cube_root_of_unity() const {
    auto w = spec_.cube_root_of_unity();
    if (!w) return std::nullopt;
    return fe(*w);
}

OpCounter CountingContext::snapshot_and_reset() {
    OpCounter out = counter_;
    counter_ = OpCounter{};
    return out;
}

} // namespace ecarith
