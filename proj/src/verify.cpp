#include "carlitz/verify.hpp"

#include <random>

namespace carlitz {

void CheckReport::add(CheckCase c) {
    if (c.verdict == Verdict::fail)
        overall = Verdict::fail;
    else if (c.verdict == Verdict::inconclusive && overall == Verdict::pass)
        overall = Verdict::inconclusive;
    cases.push_back(std::move(c));
}

namespace {

std::string poly_str(const Field& F, const Poly& a) { return poly_to_string(F, a); }

Poly random_poly(const Field& F, std::mt19937_64& rng, int max_deg) {
    Poly r;
    int deg = static_cast<int>(rng() % (max_deg + 1));
    for (int i = 0; i <= deg; ++i) r.c.push_back(static_cast<fq>(rng() % F.q()));
    poly_trim(r);
    return r;
}

Series<KRing> random_integral_series(const Field& F, std::mt19937_64& rng, int prec, int ord,
                                     int coeff_deg) {
    KRing ring(F, CoeffTag::integral);
    Series<KRing> f = series_zero(ring, prec);
    for (int i = ord; i < prec; ++i) f.c[i] = rat_from_poly(random_poly(F, rng, coeff_deg));
    // force the requested leading index
    while (f.c[ord].is_zero()) {
        Poly p = random_poly(F, rng, coeff_deg);
        f.c[ord] = rat_from_poly(p);
    }
    return f;
}

}  // namespace

CheckReport verify_hayes(const Field& F, int max_deg, int max_n, const Limits& lim) {
    CheckReport rep;
    rep.check = "hayes";
    for (int d = 1; d <= max_deg; ++d) {
        for (const Poly& pi : monic_irreducibles_of_degree(F, d)) {
            PrimeModulus pm(F, pi);
            for (int n = 1; n <= max_n; ++n) {
                CheckCase c;
                c.name = "hayes-eisenstein";
                c.params = {{"q", std::to_string(F.q())},
                            {"pi", poly_str(F, pi)},
                            {"n", std::to_string(n)}};
                bool ok = hayes_eisenstein_check(pm, n, lim);
                c.verdict = ok ? Verdict::pass : Verdict::fail;
                rep.add(std::move(c));
            }
        }
    }
    return rep;
}

CheckReport verify_frobenius(const Field& F, int max_deg, const Limits& lim) {
    (void)lim;
    CheckReport rep;
    rep.check = "frobenius";
    for (int d = 1; d <= max_deg; ++d) {
        for (const Poly& pi : monic_irreducibles_of_degree(F, d)) {
            PrimeModulus pm(F, pi);
            CheckCase c;
            c.name = "frobenius-congruence";
            c.params = {{"q", std::to_string(F.q())}, {"pi", poly_str(F, pi)}};
            c.verdict = frobenius_congruence_check(pm) ? Verdict::pass : Verdict::fail;
            rep.add(std::move(c));
        }
    }
    return rep;
}

CheckReport verify_gd_congruence(const Field& F, int d, const Limits& lim) {
    CheckReport rep;
    rep.check = "gd-congruence";
    long long qd = 1;
    for (int i = 0; i < d; ++i) qd *= F.q();
    int prec = static_cast<int>(2 * qd) + 2;
    FullForm<KRing> gd = eisenstein_gk(F, d, prec, lim);
    for (const Poly& pi : monic_irreducibles_of_degree(F, d)) {
        PrimeModulus pm(F, pi);
        CheckCase c;
        c.name = "gd-congruence";
        c.params = {{"q", std::to_string(F.q())},
                    {"pi", poly_str(F, pi)},
                    {"prec", std::to_string(prec)}};
        Congruence cong = series_congruent_mod(pm, series_to_rational(gd.series),
                                               series_one(KRing(F, CoeffTag::rational), prec),
                                               Val::of(1));
        c.verdict = cong.verdict;
        c.valuation = cong.achieved.str();
        c.bound = "1";
        rep.add(std::move(c));
    }
    return rep;
}

CheckReport verify_up_oracle(const Field& F, const std::vector<Poly>& pis, int count, int prec,
                             std::uint64_t seed) {
    CheckReport rep;
    rep.check = "up-oracle-equality";
    std::mt19937_64 rng(seed);
    for (const Poly& pi : pis) {
        PrimeModulus pm(F, pi);
        for (int t = 0; t < count; ++t) {
            Series<KRing> f = random_integral_series(F, rng, prec, static_cast<int>(rng() % 3), 2);
            CheckCase c;
            c.name = "up-oracle";
            c.params = {{"q", std::to_string(F.q())},
                        {"pi", poly_str(F, pi)},
                        {"case", std::to_string(t)}};
            Series<KRing> direct = up_direct(f, pm);
            Series<KRing> oracle = up_oracle_newton(f, pm);
            int window = std::min(direct.prec, oracle.prec);
            bool equal = series_eq_window(series_to_rational(series_truncate(direct, window)),
                                          series_truncate(oracle, window), window);
            ValBound vf = series_vp(f, pm);
            ValBound vu = series_vp(direct, pm);
            Series<KRing> v = vp_op(f, pm);
            ValBound vv = series_vp(v, pm);
            bool up_val = !(vu.v < vf.v);
            bool vp_val = !(vv.v < vf.v);
            Series<KRing> ann = up_direct(v, pm);
            bool annihilated = series_is_zero(ann);
            c.verdict = (equal && up_val && vp_val && annihilated) ? Verdict::pass : Verdict::fail;
            c.valuation = vu.str();
            c.bound = vf.str();
            if (!equal) c.detail = "oracle mismatch";
            else if (!annihilated) c.detail = "U_p V_p != 0";
            else if (!up_val || !vp_val) c.detail = "valuation dropped";
            rep.add(std::move(c));
        }
    }
    return rep;
}

CheckReport verify_normprop(const Field& F, const std::vector<Poly>& pis, int count, int prec_out,
                            std::uint64_t seed, const Limits& lim) {
    CheckReport rep;
    rep.check = "normprop";
    std::mt19937_64 rng(seed);
    for (const Poly& pi : pis) {
        PrimeModulus pm(F, pi);
        int prec_in = static_cast<int>(pm.qd()) * prec_out + 1;
        for (int t = 0; t < count; ++t) {
            int ord = static_cast<int>(rng() % 4);
            Series<KRing> f = random_integral_series(F, rng, prec_in, ord, 2);
            CheckCase c;
            c.name = "normprop";
            c.params = {{"q", std::to_string(F.q())},
                        {"pi", poly_str(F, pi)},
                        {"ord", std::to_string(ord)},
                        {"case", std::to_string(t)}};
            Series<KRing> norm = norm_product(f, pm, prec_out, lim);
            Congruence cong = series_congruent_mod(pm, series_to_rational(norm),
                                                   series_to_rational(series_truncate(f, prec_out)),
                                                   Val::of(1));
            // ord(norm) = ord(f) since prod y_j = u; the leading coefficient
            // is lead(f)^{q^d}
            bool lead_ok = true;
            auto on = series_ord(norm);
            if (ord < prec_out) {
                lead_ok = on.has_value() && *on == ord;
                if (lead_ok) {
                    Rat expected = rat_from_poly(poly_one());
                    Rat base = f.c[ord];
                    for (long long i = 0; i < pm.qd(); ++i)
                        expected = rat_mul(F, expected, base);
                    lead_ok = norm.c[ord] == expected;
                }
            }
            c.verdict = (cong.verdict == Verdict::pass && lead_ok) ? Verdict::pass
                        : (cong.verdict == Verdict::inconclusive && lead_ok ? Verdict::inconclusive
                                                                            : Verdict::fail);
            c.valuation = cong.achieved.str();
            c.bound = "1";
            if (!lead_ok) c.detail = "leading coefficient mismatch";
            rep.add(std::move(c));
        }
    }
    return rep;
}

CheckReport verify_root_symmetrics(const Field& F, const std::vector<Poly>& pis) {
    CheckReport rep;
    rep.check = "root-symmetrics";
    for (const Poly& pi : pis) {
        PrimeModulus pm(F, pi);
        RootSymmetrics rs = root_symmetrics(pm, 1, 3);
        CheckCase c;
        c.name = "root-symmetrics";
        c.params = {{"q", std::to_string(F.q())}, {"pi", poly_str(F, pi)}};
        bool ok = true;
        for (long long r = 1; r < pm.qd(); ++r) {
            const Series<KRing>& er = rs.e[static_cast<std::size_t>(r - 1)];
            for (const Rat& coeff : er.c)
                if (!coeff.is_zero() && !(v_pi(F, coeff, pi) >= Val::of(1))) ok = false;
        }
        Series<KRing> u = series_u(KRing(F, CoeffTag::integral), 3);
        if (!series_eq_window(rs.e.back(), u, 3)) ok = false;
        c.verdict = ok ? Verdict::pass : Verdict::fail;
        rep.add(std::move(c));
    }
    return rep;
}

CheckReport verify_conglemma(int p, int max_n, const Limits& lim) {
    CheckReport rep;
    rep.check = "conglemma";
    for (int r = 1;; ++r) {
        long long pr = 1;
        for (int i = 0; i < r; ++i) pr *= p;
        if (pr > max_n) break;
        for (int m = 1; m * pr <= max_n; ++m) {
            CongLemmaReport lr = conglemma_check(p, r, m, lim);
            CheckCase c;
            c.name = "conglemma";
            c.params = {{"p", std::to_string(p)},
                        {"r", std::to_string(r)},
                        {"m", std::to_string(m)},
                        {"n", std::to_string(m * pr)}};
            c.verdict = lr.pass ? Verdict::pass : Verdict::fail;
            if (!lr.pass) c.detail = "divisibility fails at " + lr.violations.front().str();
            rep.add(std::move(c));
        }
    }
    return rep;
}

CheckReport verify_tracemap(const Field& F, const Poly& pi, int n, const std::vector<int>& rs,
                            int target_prec, int digits, const Limits& lim) {
    CheckReport rep;
    rep.check = "tracemap";
    PrimeModulus pm(F, pi);
    ResidueRing ring(pm, digits);
    long long qd = pm.qd();
    int Z = static_cast<int>(2 + static_cast<long long>(target_prec - 2) * qd);

    FullForm<KRing> g1 = eisenstein_gk(F, 1, Z, lim);
    FullForm<KRing> gd = pm.d() == 1 ? g1 : eisenstein_gk(F, pm.d(), Z, lim);

    Series<ResidueRing> g1r = reduce_series(series_to_rational(g1.series), ring);
    Series<ResidueRing> g2r = series_mul(g1r, g1r);
    FullForm<ResidueRing> gsq{2 * g1.k, 0, series_truncate(g2r, Z)};
    PairForm<ResidueRing> f = lift_by_vp(gsq, pm);
    f.at_inf.body = series_truncate(f.at_inf.body, Z);

    Series<ResidueRing> gdr = reduce_series(series_to_rational(gd.series), ring);
    PairForm<ResidueRing> g0 = build_g0(pm, gdr, n);
    for (int r : rs) {
        PairForm<ResidueRing> gr = build_gr(pm, g0, r);
        TraceBoundReport tb = verify_tracemap_bound(pm, f, gr, r);
        CheckCase c;
        c.name = "tracemap-bound";
        c.params = {{"q", std::to_string(F.q())},
                    {"pi", poly_str(F, pi)},
                    {"n", std::to_string(n)},
                    {"r", std::to_string(r)},
                    {"overlap", std::to_string(tb.overlap)}};
        c.verdict = tb.verdict;
        c.valuation = tb.lhs.str();
        c.bound = tb.bound.str() + (tb.bound_exact ? "" : " (inexact)");
        rep.add(std::move(c));
    }
    return rep;
}

CheckReport verify_trace_theorem(const Field& F, const Poly& pi, int min_overlap, int digits,
                                 const Limits& lim) {
    CheckReport rep;
    rep.check = "trace-theorem";
    PrimeModulus pm(F, pi);
    ResidueRing ring(pm, digits);
    long long qd = pm.qd();
    int W = min_overlap + 1;
    int Z = static_cast<int>(2 + static_cast<long long>(W - 2) * qd);
    int A = static_cast<int>(2 + static_cast<long long>(Z - 2) * qd);

    PairForm<ResidueRing> fe = weight2_type1_fixture(ring, pm, A);
    FullForm<KRing> gd = eisenstein_gk(F, pm.d(), Z, lim);
    PairForm<ResidueRing> g0 = build_g0(pm, reduce_series(series_to_rational(gd.series), ring), 1);

    PairForm<ResidueRing> prod = pair_mul(pm, fe, g0);
    Scaled<ResidueRing> tr = trace_pair(pm, prod);
    Congruence cong = congruent_mod(pm, tr, fe.at_inf, Val::of(1));
    {
        CheckCase c;
        c.name = "trace-congruence";
        c.params = {{"q", std::to_string(F.q())},
                    {"pi", poly_str(F, pi)},
                    {"overlap", std::to_string(cong.overlap)},
                    {"min_overlap", std::to_string(min_overlap)}};
        c.verdict = cong.overlap >= min_overlap ? cong.verdict : Verdict::inconclusive;
        c.valuation = cong.achieved.str();
        c.bound = "1";
        rep.add(std::move(c));
    }
    {
        Scaled<ResidueRing> trf = trace_pair(pm, fe);
        CheckCase c;
        c.name = "trace-vanishing";
        c.params = {{"q", std::to_string(F.q())}, {"pi", poly_str(F, pi)},
                    {"overlap", std::to_string(trf.body.prec)}};
        Congruence z = congruent_mod(pm, trf,
                                     Scaled<ResidueRing>{0, series_zero(ring, trf.body.prec)},
                                     Val::of(1));
        c.verdict = z.verdict;
        c.valuation = z.achieved.str();
        c.bound = "1";
        rep.add(std::move(c));
    }
    return rep;
}

CheckReport verify_trace_theorem_exact(const Field& F, const Poly& pi, int min_overlap,
                                       const Limits& lim) {
    CheckReport rep;
    rep.check = "trace-theorem-exact";
    PrimeModulus pm(F, pi);
    KRing ring(F, CoeffTag::rational);
    long long qd = pm.qd();
    int W = min_overlap + 1;
    int Z = static_cast<int>(2 + static_cast<long long>(W - 2) * qd);
    int A = static_cast<int>(2 + static_cast<long long>(Z - 2) * qd);

    PairForm<KRing> fe = weight2_type1_fixture(ring, pm, A);
    FullForm<KRing> gd = eisenstein_gk(F, pm.d(), Z, lim);
    PairForm<KRing> g0 = build_g0(pm, series_to_rational(gd.series), 1);
    Scaled<KRing> tr = trace_pair(pm, pair_mul(pm, fe, g0));
    Congruence cong = congruent_mod(pm, tr, fe.at_inf, Val::of(1));

    CheckCase c;
    c.name = "trace-congruence-exact";
    c.params = {{"q", std::to_string(F.q())},
                {"pi", poly_str(F, pi)},
                {"overlap", std::to_string(cong.overlap)},
                {"min_overlap", std::to_string(min_overlap)}};
    c.verdict = cong.overlap >= min_overlap ? cong.verdict : Verdict::inconclusive;
    c.valuation = cong.achieved.str();
    c.bound = "1";
    rep.add(std::move(c));
    return rep;
}

CheckReport verify_norm_theorem(const Field& F, const Poly& pi, int prec, int digits,
                                const Limits& lim) {
    CheckReport rep;
    rep.check = "norm-theorem";
    PrimeModulus pm(F, pi);
    long long qd = pm.qd();
    int base_k = pm.d() == 1 ? 1 : pm.d();

    int prec_full = static_cast<int>(qd) * prec + 1;
    FullForm<KRing> base = eisenstein_gk(F, base_k, prec_full, lim);
    FullForm<KRing> Fform =
        pm.d() == 1
            ? FullForm<KRing>{2 * base.k, 0,
                              series_truncate(series_mul(base.series, base.series), prec_full)}
            : base;
    PairForm<KRing> eigen = fricke_eigen_fixture(Fform, pm);

    // exact window: leading coefficient exactly 1 and pi-integral coefficients
    int small = 3;
    Series<KRing> exact_small =
        norm_tilde(pm, eigen, 1, small, lim);
    bool lead_one = !exact_small.c.empty() && exact_small.c[0] == rat_from_int(F, 1);
    bool integral = true;
    for (const Rat& c : exact_small.c)
        if (!c.is_zero() && v_pi(F, c, pi) < Val::of(0)) integral = false;
    {
        CheckCase c;
        c.name = "norm-lead-integral";
        c.params = {{"q", std::to_string(F.q())}, {"pi", poly_str(F, pi)},
                    {"window", std::to_string(small)}};
        c.verdict = (lead_one && integral) ? Verdict::pass : Verdict::fail;
        if (!lead_one) c.detail = "leading coefficient != 1";
        rep.add(std::move(c));
    }

    // congruence at full precision
    Congruence cong;
    if (pm.d() == 1) {
        Series<KRing> nt = norm_tilde(pm, eigen, 1, prec, lim);
        Series<KRing> ahat = series_scale(series_to_rational(scaled_to_series(pm, eigen.at_inf)),
                                          rat_inv(F, eigen.at_inf.body.c[0]));
        Series<KRing> fh2 = series_truncate(series_mul(ahat, ahat), prec);
        cong = series_congruent_mod(pm, nt, fh2, Val::of(1));
    } else {
        ResidueRing ring(pm, digits);
        PairForm<ResidueRing> red{
            eigen.k, eigen.l,
            Scaled<ResidueRing>{0, reduce_series(series_to_rational(eigen.at_inf.body), ring)},
            Scaled<ResidueRing>{0, reduce_series(series_to_rational(eigen.at_zero.body), ring)}};
        Series<ResidueRing> nt = norm_tilde(pm, red, 1, prec, lim);
        Series<ResidueRing> ahat = series_scale(red.at_inf.body, ring.inv(red.at_inf.body.c[0]));
        Series<ResidueRing> fh2 = series_truncate(series_mul(ahat, ahat), prec);
        cong = series_congruent_mod(pm, nt, fh2, Val::of(1));
    }
    {
        CheckCase c;
        c.name = "norm-congruence";
        c.params = {{"q", std::to_string(F.q())}, {"pi", poly_str(F, pi)},
                    {"prec", std::to_string(prec)}, {"overlap", std::to_string(cong.overlap)}};
        c.verdict = cong.overlap >= prec ? cong.verdict : Verdict::inconclusive;
        c.valuation = cong.achieved.str();
        c.bound = "1";
        rep.add(std::move(c));
    }
    return rep;
}

}  // namespace carlitz
