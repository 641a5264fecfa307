#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "carlitz/fixtures.hpp"
#include "carlitz/operators.hpp"

using namespace carlitz;

namespace {

Series<KRing> rnd_integral(const KRing& ring, std::mt19937_64& rng, int prec, int coeff_deg,
                           int max_ord = 2) {
    Series<KRing> f = series_zero(ring, prec);
    int ord = static_cast<int>(rng() % (max_ord + 1));
    for (int i = ord; i < prec; ++i) {
        Poly p;
        int d = static_cast<int>(rng() % (coeff_deg + 1));
        for (int j = 0; j <= d; ++j) p.c.push_back(static_cast<fq>(rng() % ring.field().q()));
        poly_trim(p);
        f.c[i] = rat_from_poly(p);
    }
    return f;
}

}  // namespace

TEST_CASE("multinomials mod p via Lucas") {
    CHECK(multinomial_mod_p(4, {2, 2}, 3) == 0);   // binom(4,2) = 6
    CHECK(multinomial_mod_p(4, {1, 3}, 3) == 1);   // 4
    CHECK(multinomial_mod_p(5, {2, 2, 1}, 3) == 0);  // 30
    CHECK(multinomial_mod_p(5, {1, 1, 3}, 2) == 0);  // 20
    CHECK(multinomial_mod_p(3, {1, 1, 1}, 2) == 0);  // 6
    CHECK(multinomial_mod_p(2, {1, 1}, 2) == 0);   // 2
    CHECK(multinomial_mod_p(3, {1, 2}, 2) == 1);   // 3
    CHECK(multinomial_mod_p(0, {0, 0}, 5) == 1);
}

TEST_CASE("up_direct: frozen examples") {
    Field F(3, 1);
    PrimeModulus pm(F, poly_T());
    KRing ring(F, CoeffTag::integral);
    // u|U = u
    Series<KRing> u = series_u(ring, 10);
    Series<KRing> uu = up_direct(u, pm);
    CHECK(uu.prec == up_output_prec(10, 3));
    CHECK(uu.c[1] == rat_from_int(F, 1));
    for (int i = 2; i < uu.prec; ++i) CHECK(uu.c[i].is_zero());
    CHECK(uu.c[0].is_zero());
    // u^2|U = T u^2
    Series<KRing> u2 = series_zero(ring, 10);
    u2.c[2] = rat_from_int(F, 1);
    Series<KRing> r = up_direct(u2, pm);
    CHECK(r.c[2] == rat_from_poly(poly_T()));
    CHECK(r.c[1].is_zero());
    CHECK(r.c[3].is_zero());
}

TEST_CASE("up output precision rule") {
    CHECK(up_output_prec(25, 3) == 9);
    CHECK(up_output_prec(25, 9) == 4);
    CHECK(up_output_prec(2, 3) == 2);
    CHECK(up_output_prec(1, 3) == 1);
    CHECK(up_output_prec(0, 3) == 1);
}

TEST_CASE("root symmetrics at q=3, pi=T: (Tu, 0, u) and Newton power sums") {
    Field F(3, 1);
    PrimeModulus pm(F, poly_T());
    RootSymmetrics rs = root_symmetrics(pm, 3, 5);
    CHECK(rs.e[0].c[1] == rat_from_poly(poly_T()));
    CHECK(series_is_zero(rs.e[1]));
    CHECK(rs.e[2].c[1] == rat_from_int(F, 1));
    // p_1 = T u, p_2 = T^2 u^2, p_3 = T^3 u^3
    CHECK(rs.p[0].c[1] == rat_from_poly(poly_T()));
    CHECK(rs.p[1].c[2] == rat_from_poly(poly_parse(F, "T^2")));
    CHECK(rs.p[2].c[3] == rat_from_poly(poly_parse(F, "T^3")));
}

TEST_CASE("e_{q^d} = u for every tested prime") {
    for (int q : {2, 3}) {
        Field F(q, 1);
        for (int d = 1; d <= 2; ++d)
            for (const Poly& pi : monic_irreducibles_of_degree(F, d)) {
                PrimeModulus pm(F, pi);
                RootSymmetrics rs = root_symmetrics(pm, 1, 3);
                Series<KRing> u = series_u(KRing(F, CoeffTag::integral), 3);
                CHECK(series_eq_window(rs.e.back(), u, 3));
                for (long long r = 1; r < pm.qd(); ++r)
                    for (const Rat& c : rs.e[r - 1].c)
                        if (!c.is_zero()) CHECK(v_pi(F, c, pi) >= Val::of(1));
            }
    }
}

TEST_CASE("oracle equality, valuations, annihilation on random series") {
    std::mt19937_64 rng(2024);
    for (int q : {2, 3}) {
        Field F(q, 1);
        KRing ring(F, CoeffTag::integral);
        std::vector<Poly> pis = monic_irreducibles_of_degree(F, 1);
        for (const Poly& pi : monic_irreducibles_of_degree(F, 2)) pis.push_back(pi);
        for (const Poly& pi : pis) {
            PrimeModulus pm(F, pi);
            for (int t = 0; t < 6; ++t) {
                Series<KRing> f = rnd_integral(ring, rng, 30, 2);
                Series<KRing> direct = up_direct(f, pm);
                Series<KRing> oracle = up_oracle_newton(f, pm);
                int w = std::min(direct.prec, oracle.prec);
                CHECK(series_eq_window(series_truncate(series_to_rational(direct), w),
                                       series_truncate(oracle, w), w));
                CHECK_FALSE(series_vp(direct, pm).v < series_vp(f, pm).v);
                Series<KRing> v = vp_op(f, pm);
                CHECK_FALSE(series_vp(v, pm).v < series_vp(f, pm).v);
                CHECK(series_is_zero(up_direct(v, pm)));
                // mod-p digit extraction: a_j == c_{q^d (j-1) + 1} (mod p)
                for (int j = 1; j < direct.prec; ++j) {
                    long long n = pm.qd() * (j - 1) + 1;
                    Rat diff = rat_sub(F, direct.c[j], f.c[static_cast<int>(n)]);
                    if (!diff.is_zero()) CHECK(v_pi(F, diff, pi) >= Val::of(1));
                }
            }
        }
    }
}

TEST_CASE("vp_op: frozen examples") {
    Field F(3, 1);
    PrimeModulus pm(F, poly_T());
    KRing ring(F, CoeffTag::integral);
    Series<KRing> u = series_u(ring, 3);
    Series<KRing> v = vp_op(u, pm);
    CHECK(v.prec == 9);
    CHECK(v.c[3] == rat_from_int(F, 1));
    CHECK(v.c[5] == rat_from_poly(poly_mul_scalar(F, poly_T(), 2)));  // -T
    CHECK(v.c[7] == rat_from_poly(poly_parse(F, "T^2")));
    CHECK(v.c[4].is_zero());
    // constants pass through
    Series<KRing> one = series_one(ring, 2);
    Series<KRing> vone = vp_op(one, pm);
    CHECK(vone.c[0] == rat_from_int(F, 1));
    // mod p, V_p is u -> u^{q^d}
    std::mt19937_64 rng(4);
    Series<KRing> f = rnd_integral(ring, rng, 6, 2, 0);
    Series<KRing> vf = vp_op(f, pm);
    for (int i = 0; i < vf.prec; ++i) {
        Rat expect = (i % 3 == 0 && i / 3 < f.prec) ? f.c[i / 3] : Rat{};
        Rat diff = rat_sub(F, vf.c[i], expect);
        if (!diff.is_zero()) CHECK(v_pi(F, diff, poly_T()) >= Val::of(1));
    }
}

TEST_CASE("lift, pair multiplication, Fricke, trace") {
    Field F(3, 1);
    PrimeModulus pm(F, poly_T());
    KRing ring(F, CoeffTag::rational);
    std::mt19937_64 rng(8);

    // lift of a weight-2 form has at_zero = pi^{-1} F
    Series<KRing> base = rnd_integral(KRing(F, CoeffTag::integral), rng, 9, 2, 0);
    FullForm<KRing> Fform{2, 0, series_to_rational(base)};
    PairForm<KRing> lifted = lift_by_vp(Fform, pm);
    CHECK(lifted.at_zero.half_exp == 0);
    Series<KRing> expect = series_scale(Fform.series, rat_make(F, poly_one(), poly_T()));
    CHECK(series_eq_window(lifted.at_zero.body, expect, expect.prec));

    // lift(F) * lift(G) = lift(F G)
    Series<KRing> base2 = rnd_integral(KRing(F, CoeffTag::integral), rng, 9, 2, 0);
    FullForm<KRing> Gform{4, 0, series_to_rational(base2)};
    PairForm<KRing> prod = pair_mul(pm, lifted, lift_by_vp(Gform, pm));
    FullForm<KRing> FG{6, 0, series_mul(Fform.series, Gform.series)};
    PairForm<KRing> liftFG = lift_by_vp(FG, pm);
    int w = std::min(prod.at_inf.body.prec, liftFG.at_inf.body.prec);
    CHECK(series_eq_window(series_truncate(prod.at_inf.body, w),
                           series_truncate(liftFG.at_inf.body, w), w));
    int wz = std::min(prod.at_zero.body.prec, liftFG.at_zero.body.prec);
    CHECK(prod.at_zero.half_exp == liftFG.at_zero.half_exp);
    CHECK(series_eq_window(series_truncate(prod.at_zero.body, wz),
                           series_truncate(liftFG.at_zero.body, wz), wz));

    // double Fricke multiplies by (-1)^k
    PairForm<KRing> twice = fricke_pair(pm, fricke_pair(pm, lifted));
    fq sign = F.from_int(lifted.k % 2 == 0 ? 1 : -1);
    CHECK(series_eq_window(twice.at_inf.body, series_scale_fq(lifted.at_inf.body, sign),
                           twice.at_inf.body.prec));

    // trace with vanishing at_zero is the identity on at_inf
    PairForm<KRing> triv{2, 0, Scaled<KRing>{0, series_to_rational(base)},
                         Scaled<KRing>{0, series_zero(ring, 9)}};
    Scaled<KRing> tr = trace_pair(pm, triv);
    CHECK(tr.half_exp == 0);
    CHECK(series_eq_window(tr.body, series_to_rational(series_truncate(base, tr.body.prec)),
                           tr.body.prec));

    // k = 2 synthetic: at_inf = at_zero = u gives Tr = u + (u|U) = 2u
    PairForm<KRing> synth{2, 1, Scaled<KRing>{0, series_u(ring, 9)},
                          Scaled<KRing>{0, series_u(ring, 9)}};
    Scaled<KRing> tr2 = trace_pair(pm, synth);
    CHECK(tr2.body.c[1] == rat_from_int(F, 2));
}

TEST_CASE("fricke_full_level parity and body") {
    Field F(3, 1);
    PrimeModulus pm(F, poly_T());
    KRing ring(F, CoeffTag::integral);
    Series<KRing> one = series_one(ring, 4);
    FullForm<KRing> c1{0, 0, one};
    Scaled<KRing> w = fricke_full_level(c1, pm);
    CHECK(w.half_exp == 0);
    CHECK(w.body.c[0] == rat_from_int(F, 1));
    FullForm<KRing> f3{3, 0, one};
    Scaled<KRing> w3 = fricke_full_level(f3, pm);
    CHECK(w3.half_exp == 1);  // parity k mod 2
}

TEST_CASE("norm_product: frozen examples") {
    Field F(3, 1);
    PrimeModulus pm(F, poly_T());
    KRing ring(F, CoeffTag::integral);
    // f = 1 -> 1
    Series<KRing> one = series_one(ring, 10);
    Series<KRing> n1 = norm_product(one, pm, 3);
    CHECK(n1.prec == 3);
    CHECK(n1.c[0] == rat_from_int(F, 1));
    CHECK(n1.c[1].is_zero());
    CHECK(n1.c[2].is_zero());
    // f = u -> product of the y_j = u
    Series<KRing> u = series_u(ring, 10);
    Series<KRing> nu = norm_product(u, pm, 3);
    CHECK(nu.c[1] == rat_from_int(F, 1));
    CHECK(nu.c[0].is_zero());
    CHECK(nu.c[2].is_zero());
    // insufficient input precision is rejected
    CHECK_THROWS_AS(norm_product(series_one(ring, 3), pm, 3), std::invalid_argument);
}

TEST_CASE("norm_product congruence and leading coefficient on random inputs") {
    std::mt19937_64 rng(555);
    for (int q : {2, 3}) {
        Field F(q, 1);
        KRing ring(F, CoeffTag::integral);
        for (int d = 1; d <= 2; ++d) {
            Poly pi = monic_irreducibles_of_degree(F, d).front();
            PrimeModulus pm(F, pi);
            int prec_out = 6;
            int prec_in = static_cast<int>(pm.qd()) * prec_out + 1;
            for (int t = 0; t < 4; ++t) {
                Series<KRing> f = rnd_integral(ring, rng, prec_in, 2, 2);
                Series<KRing> norm = norm_product(f, pm, prec_out);
                Congruence c = series_congruent_mod(pm, series_to_rational(norm),
                                                    series_to_rational(series_truncate(f, prec_out)),
                                                    Val::of(1));
                CHECK(c.verdict == Verdict::pass);
                // the norm's order equals ord(f): prod y_j = u, each root of
                // valuation 1/q^d, and the leading coefficient is lead(f)^{q^d}
                auto ordf = series_ord(f);
                if (*ordf < prec_out) {
                    Rat lead = rat_from_int(F, 1);
                    for (long long i = 0; i < pm.qd(); ++i) lead = rat_mul(F, lead, f.c[*ordf]);
                    CHECK(series_ord(norm).value_or(-1) == *ordf);
                    CHECK(norm.c[*ordf] == lead);
                }
            }
        }
    }
}

TEST_CASE("norm_product serial and parallel agree") {
    Field F(3, 1);
    PrimeModulus pm(F, poly_parse(F, "T^2+1"));
    KRing ring(F, CoeffTag::integral);
    std::mt19937_64 rng(31337);
    Series<KRing> f = rnd_integral(ring, rng, 9 * 4 + 1, 2, 1);
    Series<KRing> a = norm_product_serial(f, pm, 4);
    Series<KRing> b = norm_product_impl(f, pm, 4, Limits{}, true);
    CHECK(series_eq_window(a, b, 4));
}

TEST_CASE("norm_tilde basics") {
    Field F(3, 1);
    PrimeModulus pm(F, poly_T());
    KRing ring(F, CoeffTag::rational);
    // constant-1 pair of weight 0: result 1
    Series<KRing> one = series_one(ring, 12);
    PairForm<KRing> cpair{0, 0, Scaled<KRing>{0, one}, Scaled<KRing>{0, one}};
    Series<KRing> nt = norm_tilde(pm, cpair, 1, 3);
    CHECK(nt.c[0] == rat_from_int(F, 1));
    CHECK(nt.c[1].is_zero());
    // eigen assertion failure
    Series<KRing> other = series_u(ring, 12);
    PairForm<KRing> bad{0, 0, Scaled<KRing>{0, one}, Scaled<KRing>{0, other}};
    CHECK_THROWS_AS(norm_tilde(pm, bad, 1, 3), std::invalid_argument);
}

TEST_CASE("trace of a V_p lift: Tr(f) = F|V_p + pi^{1-k} F|U_p") {
    Field F(3, 1);
    PrimeModulus pm(F, poly_T());
    KRing ring(F, CoeffTag::integral);
    std::mt19937_64 rng(99);
    Series<KRing> base = rnd_integral(ring, rng, 28, 2, 0);
    FullForm<KRing> Fform{4, 0, series_to_rational(base)};
    PairForm<KRing> f = lift_by_vp(Fform, pm);
    Series<KRing> tr = scaled_to_series(pm, trace_pair(pm, f));
    Series<KRing> direct = series_add(
        series_truncate(vp_op(Fform.series, pm, tr.prec), tr.prec),
        series_truncate(series_mul_pi_pow(up_direct(Fform.series, pm), pm, 1 - Fform.k), tr.prec));
    CHECK(series_eq_window(tr, direct, tr.prec));
}

TEST_CASE("exact and residue lanes agree on the trace-theorem pipeline at d=1") {
    // small-precision exact-lane replica of the congruence Tr(f_E g_(0)) == f_E,
    // compared coefficient-by-coefficient against the residue lane
    Field F(3, 1);
    PrimeModulus pm(F, poly_T());
    Limits lim;
    int W = 5, Z = 2 + (W - 2) * 3, A = 2 + (Z - 2) * 3;  // 11, 29

    KRing kring(F, CoeffTag::rational);
    PairForm<KRing> fe = weight2_type1_fixture(kring, pm, A);
    FullForm<KRing> gd = eisenstein_gk(F, 1, Z, lim);
    PairForm<KRing> g0 = build_g0(pm, series_to_rational(gd.series), 1);
    Scaled<KRing> tr = trace_pair(pm, pair_mul(pm, fe, g0));
    Scaled<KRing> diff = scaled_sub(pm, tr, fe.at_inf);
    CHECK(diff.body.prec >= W - 1);
    ValBound v = scaled_vp(pm, diff);
    CHECK(v.exact);
    CHECK(v.v >= Val::of(1));

    ResidueRing rr(pm, 2);
    PairForm<ResidueRing> fer = weight2_type1_fixture(rr, pm, A);
    PairForm<ResidueRing> g0r = build_g0(pm, reduce_series(series_to_rational(gd.series), rr), 1);
    Scaled<ResidueRing> trr = trace_pair(pm, pair_mul(pm, fer, g0r));
    Scaled<ResidueRing> diffr = scaled_sub(pm, trr, fer.at_inf);
    REQUIRE(diffr.half_exp == diff.half_exp);
    int w = std::min(diff.body.prec, diffr.body.prec);
    Series<ResidueRing> reduced = reduce_series(series_truncate(diff.body, w), rr);
    CHECK(series_eq_window(reduced, series_truncate(diffr.body, w), w));
}

TEST_CASE("tracemap bound on the zero form passes trivially") {
    Field F(3, 1);
    PrimeModulus pm(F, poly_T());
    KRing ring(F, CoeffTag::rational);
    Series<KRing> gd = series_one(ring, 14);
    gd.c[2] = rat_from_poly(poly_mul_scalar(F, poly_parse(F, "T^3+2*T"), 2));  // a g-like 1 mod p
    PairForm<KRing> g0 = build_g0(pm, gd, 1);
    PairForm<KRing> zero{2, 0, Scaled<KRing>{0, series_zero(ring, 14)},
                         Scaled<KRing>{0, series_zero(ring, 14)}};
    TraceBoundReport rep = verify_tracemap_bound(pm, zero, g0, 0);
    CHECK(rep.verdict == Verdict::pass);
    CHECK(rep.lhs.v.inf);
    CHECK(rep.bound.inf);
}

TEST_CASE("build_g0/build_gr postconditions via a tiny residue pipeline") {
    Field F(3, 1);
    PrimeModulus pm(F, poly_T());
    ResidueRing rr(pm, 4);
    // a stand-in for g_d: any series == 1 (mod pi) with constant term 1
    Series<ResidueRing> gd = series_one(rr, 14);
    gd.c[2] = rr.embed_poly(poly_mul_scalar(F, poly_parse(F, "T^3+2*T"), 2));
    PairForm<ResidueRing> g0 = build_g0(pm, gd, 1);
    CHECK(g0.k == 2);
    CHECK(g0.at_zero.half_exp == 2);
    // constant term of at_inf is 1 - pi^{n(q^d-1)}
    CHECK(g0.at_inf.body.c[0] ==
          rr.embed_poly(poly_sub(F, poly_one(), poly_parse(F, "T^2"))));
    PairForm<ResidueRing> g1 = build_gr(pm, g0, 1);
    CHECK(g1.k == 6);
    Congruence c = series_congruent_mod(pm, scaled_to_series(pm, g1.at_inf),
                                        series_one(rr, g1.at_inf.body.prec), Val::of(3));
    CHECK(c.verdict == Verdict::pass);
}
