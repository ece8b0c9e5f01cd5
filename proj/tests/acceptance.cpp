// Acceptance suite: one line per criterion, zero tolerance where stated.
// Exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ecarith/costkit.hpp"
#include "ecarith/hessian.hpp"
#include "ecarith/quartic.hpp"
#include "ecarith/suites.hpp"
#include "ecarith/wmodel.hpp"

using namespace ecarith;
namespace qt = ecarith::quartic;
namespace hs = ecarith::hessian;
namespace ck = ecarith::costkit;
using wmodel::PointW;
using qt::QModel;
using qt::PhiD1Mode;

namespace {

int failures = 0;

void report(int num, const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("[%s] C%d %s%s%s\n", pass ? "PASS" : "FAIL", num, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

constexpr std::uint64_t kSeed = 7;
constexpr std::uint64_t kTrials = 1000;

suites::SuiteConfig cfg_prime(std::uint64_t p, std::uint64_t u, std::uint64_t v,
                              std::uint64_t a = 2) {
    suites::SuiteConfig c;
    c.prime = p;
    c.u = u;
    c.v = v;
    c.a = a;
    c.seed = kSeed;
    c.trials = kTrials;
    return c;
}

suites::SuiteConfig cfg_binary(unsigned k, std::uint64_t u, std::uint64_t v) {
    suites::SuiteConfig c;
    c.binary = true;
    c.k = k;
    c.u = u;
    c.v = v;
    c.seed = kSeed;
    c.trials = kTrials;
    return c;
}

bool count_ok(const std::string& op, const suites::SuiteConfig& c, std::string& log) {
    auto rep = suites::run_count_op(op, c);
    if (!rep.pass)
        log += op + " got M=" + std::to_string(rep.delta.M) + " S=" +
               std::to_string(rep.delta.S) + " want M=" + std::to_string(rep.claimed_M) +
               " S=" + std::to_string(rep.claimed_S) + "; ";
    return rep.pass;
}

// criterion 1: operation-count reproduction, zero tolerance on M and S
void criterion1() {
    bool ok = true;
    std::string log;
    for (std::uint64_t p : {101ULL, 13ULL}) {
        auto generic = cfg_prime(p, 1, 2);
        for (const char* op : {"triple-h", "psi-h", "phi-h", "psi-q", "phi-q", "double-q1",
                               "double-q2", "double-q2-fast", "psi-d1", "phi-d1"})
            ok &= count_ok(op, generic, log);
        auto twist = cfg_prime(p, 6, 1);
        for (const char* op : {"double-q2-twist", "phi-d1-twist"}) ok &= count_ok(op, twist, log);
    }
    auto b = cfg_binary(8, 0x07, 0x0D);
    for (const char* op : {"psi-q", "phi-q", "double-q1", "double-q2"}) ok &= count_ok(op, b, log);
    report(1, "operation-count reproduction (8M+4S tripling, 4S isogenies, 8S/1M+6S/7S doubling)",
           ok, log.empty() ? "all deltas exact over F101, F13, F2^8" : log);
}

// criterion 2: projective agreement with the affine chord-tangent oracle
void criterion2() {
    bool ok = true;
    std::string log;
    for (std::uint64_t p : {13ULL, 101ULL, 1009ULL}) {
        for (auto uv : {std::pair<std::uint64_t, std::uint64_t>{1, 2}, {6, 1}}) {
            CountingContext ctx(FieldSpec::odd_prime(p));
            auto params = qt::create(ctx, uv.first, uv.second);
            auto e1 = qt::weierstrass_of(ctx.field(), params, QModel::Q1);
            auto e2 = qt::weierstrass_of(ctx.field(), params, QModel::Q2);
            RngStream rng(kSeed, p * 1000 + uv.first * 10 + uv.second);
            bool inst = true;
            for (std::uint64_t i = 0; i < kTrials && inst; ++i) {
                PointW P1 = wmodel::sample_point(e1, rng);
                auto Q1 = qt::embed(ctx, params, QModel::Q1, P1);
                inst &= proj_eq(ctx.field(), qt::double_q(ctx, params, Q1).P,
                                qt::embed(ctx, params, QModel::Q1,
                                          wmodel::scalar_mul(e1, 2, P1)).P);
                inst &= proj_eq(ctx.field(), qt::tau_translate(ctx, params, Q1).P,
                                qt::embed(ctx, params, QModel::Q1,
                                          wmodel::add(e1, P1, PointW::affine(0, 0))).P);
                inst &= proj_eq(ctx.field(), qt::negate_q1(ctx, params, Q1).P,
                                qt::embed(ctx, params, QModel::Q1, wmodel::neg(e1, P1)).P);
                PointW P2 = wmodel::sample_point(e2, rng);
                auto Q2 = qt::embed(ctx, params, QModel::Q2, P2);
                auto two = qt::embed(ctx, params, QModel::Q2, wmodel::scalar_mul(e2, 2, P2));
                inst &= proj_eq(ctx.field(), qt::double_q(ctx, params, Q2).P, two.P);
                inst &= proj_eq(ctx.field(),
                                qt::double_q2_fast(ctx, params, Q2, PhiD1Mode::Generic).P, two.P);
            }
            ok &= inst;
            if (!inst) log += "failed at p=" + std::to_string(p) + " (u,v)=(" +
                              std::to_string(uv.first) + "," + std::to_string(uv.second) + "); ";
        }
    }
    report(2, "oracle agreement: double_q, double_q2_fast, tau_T, negate_q1", ok,
           log.empty() ? "10^3 seeded points, exact projective equality, 6 instances" : log);
}

// criterion 3: isogeny composition equals [2] / [3]
void criterion3() {
    bool ok = true;
    std::string log;
    for (std::uint64_t p : {13ULL, 101ULL, 1009ULL}) {
        for (auto uv : {std::pair<std::uint64_t, std::uint64_t>{1, 2}, {6, 1}}) {
            CountingContext ctx(FieldSpec::odd_prime(p));
            auto params = qt::create(ctx, uv.first, uv.second);
            auto e1 = qt::weierstrass_of(ctx.field(), params, QModel::Q1);
            auto e2 = qt::weierstrass_of(ctx.field(), params, QModel::Q2);
            RngStream rng(kSeed, 0xc3 + p);
            bool inst = true;
            for (std::uint64_t i = 0; i < kTrials && inst; ++i) {
                PointW P1 = wmodel::sample_point(e1, rng);
                auto Q1 = qt::embed(ctx, params, QModel::Q1, P1);
                inst &= proj_eq(ctx.field(),
                                qt::phi_fast(ctx, params, qt::psi_fast(ctx, params, Q1)).P,
                                qt::embed(ctx, params, QModel::Q1,
                                          wmodel::scalar_mul(e1, 2, P1)).P);
                PointW P2 = wmodel::sample_point(e2, rng);
                auto Q2 = qt::embed(ctx, params, QModel::Q2, P2);
                inst &= proj_eq(ctx.field(),
                                qt::psi_fast(ctx, params, qt::phi_fast(ctx, params, Q2)).P,
                                qt::embed(ctx, params, QModel::Q2,
                                          wmodel::scalar_mul(e2, 2, P2)).P);
            }
            ok &= inst;
            if (!inst) log += "Q composition failed at p=" + std::to_string(p) + "; ";
        }
    }
    {
        // char-2 variant of the quartic compositions
        CountingContext ctx(FieldSpec::binary(8));
        auto params = qt::create(ctx, 0x07, 0x0D, false);
        auto e1 = qt::weierstrass_of(ctx.field(), params, QModel::Q1);
        auto e2 = qt::weierstrass_of(ctx.field(), params, QModel::Q2);
        RngStream rng(kSeed, 0xb1);
        bool inst = true;
        for (std::uint64_t i = 0; i < kTrials && inst; ++i) {
            PointW P1 = wmodel::sample_point(e1, rng);
            auto Q1 = qt::embed(ctx, params, QModel::Q1, P1);
            inst &= proj_eq(ctx.field(),
                            qt::phi_fast(ctx, params, qt::psi_fast(ctx, params, Q1)).P,
                            qt::embed(ctx, params, QModel::Q1,
                                      wmodel::scalar_mul(e1, 2, P1)).P);
            PointW P2 = wmodel::sample_point(e2, rng);
            auto Q2 = qt::embed(ctx, params, QModel::Q2, P2);
            inst &= proj_eq(ctx.field(),
                            qt::psi_fast(ctx, params, qt::phi_fast(ctx, params, Q2)).P,
                            qt::embed(ctx, params, QModel::Q2,
                                      wmodel::scalar_mul(e2, 2, P2)).P);
        }
        ok &= inst;
        if (!inst) log += "Q composition failed over F_2^8; ";
    }
    for (std::uint64_t p : {13ULL, 101ULL}) {
        CountingContext ctx(FieldSpec::odd_prime(p));
        auto c = hs::create(ctx, 2);
        auto raw = hs::enumerate_points(ctx.field(), c);
        std::vector<Proj3> pts;
        for (const auto& P : raw)
            pts.push_back(Proj3{{ctx.fe(P[0].v), ctx.fe(P[1].v), ctx.fe(P[2].v)}});
        RngStream rng(kSeed, 0x335 + p);
        bool inst = true;
        for (std::uint64_t i = 0; i < kTrials && inst; ++i) {
            Proj3 P = pts[rng.next() % pts.size()];
            Proj3 chain = hs::add(ctx, c, hs::add(ctx, c, P, P), P);
            inst &= proj_eq(ctx.field(), hs::triple(ctx, c, P), chain);
        }
        ok &= inst;
        if (!inst) log += "hessian [3] failed at p=" + std::to_string(p) + "; ";
    }
    report(3, "isogeny composition: psi.phi=[2] on Q2, phi.psi=[2] on Q1, psi.phi=[3] on H_a",
           ok, log.empty() ? "10^3 points per instance (6 odd instances + F_2^8), exact" : log);
}

// criterion 4: kernels
void criterion4() {
    bool ok = true;
    std::string log;
    {
        CountingContext ctx(FieldSpec::odd_prime(13));
        auto params = qt::create(ctx, 1, 2);
        qt::QuarticPoint T{Proj4{{ctx.zero(), ctx.zero(), ctx.one(), ctx.zero()}}, QModel::Q1};
        ok &= proj_eq(ctx.field(), qt::psi_raw(ctx, params, T).P,
                      qt::identity(ctx, QModel::Q2).P);
        if (!ok) log += "psi_raw(T) != O; ";
    }
    {
        CountingContext ctx(FieldSpec::odd_prime(13));
        auto c = hs::create(ctx, 2);
        Proj3 O = hs::identity(ctx);
        std::size_t kernel = 0;
        bool fiber_only = true;
        for (const auto& Praw : hs::enumerate_points(ctx.field(), c)) {
            Proj3 P{{ctx.fe(Praw[0].v), ctx.fe(Praw[1].v), ctx.fe(Praw[2].v)}};
            bool dies = proj_eq(ctx.field(), hs::phi_mu3(ctx, c, P), O);
            if (dies) {
                ++kernel;
                fiber_only &= P[0].v == 0;
            } else {
                fiber_only &= P[0].v != 0 ||
                              !proj_eq(ctx.field(), hs::phi_mu3(ctx, c, P), O);
            }
        }
        bool hk = kernel == 3 && fiber_only;
        ok &= hk;
        if (!hk) log += "mu3 fiber: " + std::to_string(kernel) + " kernel points; ";
    }
    report(4, "kernels: psi(0:0:1:0) = O; phi_mu3 kills exactly the mu3 fiber (p=13)", ok,
           log.empty() ? "exhaustive" : log);
}

// criterion 5: basis-change determinants
void criterion5() {
    bool ok = true;
    std::string log;
    for (std::uint64_t p : {13ULL, 101ULL, 1009ULL}) {
        FieldSpec F = FieldSpec::odd_prime(p);
        CountingContext ctx(F);
        auto params = qt::create(ctx, 1, 2);
        std::uint64_t d1 = qt::det4(F, qt::psi_basis_matrix(F, params));
        std::uint64_t d2 = qt::det4(F, qt::phi_basis_matrix(F, params));
        ok &= d1 == F.from_int(32) && d2 == 1;
        if (d1 != F.from_int(32)) log += "psi det != 32 over F" + std::to_string(p) + "; ";
    }
    {
        FieldSpec F = FieldSpec::binary(8);
        CountingContext ctx(F);
        auto params = qt::create(ctx, 0x07, 0x0D, false);
        ok &= qt::det4(F, qt::psi_basis_matrix_char2(F, params)) == 1;
        ok &= qt::det4(F, qt::phi_basis_matrix_char2(F, params)) == 1;
        ok &= qt::det4(F, qt::phi_basis_matrix(F, params)) == 1;
    }
    report(5, "basis-change certificates: det 32 (char!=2 psi), det 1 (char-2 psi, both phi)",
           ok, log.empty() ? "verified over F13, F101, F1009, F2^8" : log);
}

// criterion 6: table reproduction
void criterion6() {
    bool ok = true;
    std::string log;
    auto models = ck::table_cost_models();
    auto trows = ck::tripling_rows();
    auto texp = ck::tripling_expected();
    for (std::size_t i = 0; i < trows.size(); ++i)
        for (std::size_t j = 0; j < models.size(); ++j) {
            double got = ck::effective_cost(trows[i].op, {models[j], 0.0});
            if (std::abs(got - texp[i][j]) > ck::kTableTolerance) {
                ok = false;
                log += "tripling[" + std::to_string(i) + "][" + std::to_string(j) + "]; ";
            }
        }
    auto drows = ck::doubling_rows();
    auto dexp = ck::doubling_expected();
    for (std::size_t i = 0; i < drows.size(); ++i)
        for (std::size_t j = 0; j < models.size(); ++j) {
            double got = ck::effective_cost(drows[i].op, {models[j], 0.0});
            if (std::abs(got - dexp[i][j]) > ck::kTableTolerance) {
                ok = false;
                log += "doubling[" + std::to_string(i) + "][" + std::to_string(j) + "]; ";
            }
        }
    static const std::uint64_t mono[4][3] = {{3, 6, 10}, {4, 10, 20}, {5, 15, 35}, {6, 21, 56}};
    for (std::uint64_t d = 3; d <= 6; ++d)
        for (std::uint64_t n = 1; n <= 3; ++n) {
            auto r = ck::dimension_report(d, n);
            if (r.monomial_dim != mono[d - 3][n - 1] || r.section_dim != n * d) {
                ok = false;
                log += "dim(" + std::to_string(d) + "," + std::to_string(n) + "); ";
            }
        }
    ok &= ck::bidegree22_relation_dim(3) == 0;
    ok &= ck::bidegree22_relation_dim(4) == 36;
    ok &= ck::bidegree22_relation_dim(5) == 125;
    ok &= ck::bidegree22_relation_dim(6) == 297;
    report(6, "tables: 15+12 cost cells within 0.03; dimension tables and 36/125/297 exact",
           ok, log.empty() ? "all cells reproduced" : log);
}

// criterion 7: exactness predicate
void criterion7() {
    FieldSpec F = FieldSpec::odd_prime(13);
    auto c = wmodel::e1_from_params(F, 1, 2);
    PointW T2 = PointW::affine(0, 0);
    bool ok = true;
    std::string log;

    wmodel::KernelSpec even;
    even.G = {PointW::infinity(), T2};
    even.n = 2;
    even.d = 3;
    even.T1 = even.S1 = PointW::infinity();
    if (wmodel::exactness_check(c, even)) { ok = false; log += "even-cyclic not false; "; }

    std::vector<PointW> tor2;
    for (const auto& P : wmodel::enumerate_points(c))
        if (wmodel::scalar_mul(c, 2, P).inf) tor2.push_back(P);
    wmodel::KernelSpec mult;
    mult.G = tor2;
    mult.n = 4;
    mult.d = 3;
    mult.T1 = PointW::infinity();
    mult.S1 = tor2.size() > 1 ? tor2[1] : PointW::infinity();
    if (tor2.size() != 4 || !wmodel::exactness_check(c, mult)) {
        ok = false;
        log += "multiplication-by-n not true; ";
    }

    wmodel::KernelSpec psid;
    psid.G = {PointW::infinity(), T2};
    psid.n = 2;
    psid.d = 4;
    psid.T1 = PointW::infinity();
    psid.S1 = T2;
    if (!wmodel::exactness_check(c, psid)) { ok = false; log += "psi data not true; "; }

    report(7, "exactness predicate: false/true/true on the three configurations over F13", ok,
           log.empty() ? "matches the divisor computation" : log);
}

// criterion 8: degree-3 example isogeny, exhaustive over F13, (a,b) = (1,1)
void criterion8() {
    FieldSpec F = FieldSpec::odd_prime(13);
    bool agree = true, complete = true, on_image = true;
    for (const auto& P : wmodel::enumerate_example_domain(F, 1, 1)) {
        auto ts = wmodel::example_isogeny_tuples(F, 1, 1, P);
        auto nz = [](const wmodel::RawP2& t) { return t[0] || t[1] || t[2]; };
        int live = 0;
        for (int i = 0; i < 3; ++i) {
            if (!nz(ts[i])) continue;
            ++live;
            on_image &= wmodel::on_example_codomain(F, 1, 1, ts[i]);
            for (int j = i + 1; j < 3; ++j)
                if (nz(ts[j])) agree &= wmodel::rawp2_proj_eq(F, ts[i], ts[j]);
        }
        complete &= live > 0;
    }
    report(8, "degree-3 tuples: pairwise agreement, empty common zero set (exhaustive, F13)",
           agree && complete && on_image,
           agree && complete ? "complete system verified" : "violation found");
}

// criterion 9: property suites under the fixed default seed
void criterion9() {
    bool ok = true;
    std::string log;
    auto run = [&](const char* name, const suites::SuiteConfig& c) {
        auto rs = suites::run_suite(name, c);
        for (const auto& r : rs)
            if (!r.pass) {
                ok = false;
                log += std::string(name) + "/" + r.name + "; ";
            }
    };
    run("all", cfg_prime(13, 1, 2));
    run("quartic", cfg_prime(101, 6, 1));
    run("hessian", cfg_prime(101, 1, 2));
    run("quartic", cfg_binary(8, 0x07, 0x0D));
    run("xforms", cfg_binary(8, 0x07, 0x0D));
    report(9, "property suites: field axioms, group axioms, round trips, Hasse counts (seed 7)",
           ok, log.empty() ? "all named invariants pass" : log);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 9 acceptance criteria passed\n");
    return failures == 0 ? 0 : 1;
}
