#ifndef CARLITZ_OPERATORS_HPP
#define CARLITZ_OPERATORS_HPP

#include <vector>

#include "carlitz/limits.hpp"
#include "carlitz/series.hpp"

namespace carlitz {

// Expansion at infinity of a form for the full group GL_2(A).
template <class R>
struct FullForm {
    int k = 0;  // weight
    int l = 0;  // type mod q-1
    Series<R> series;
};

// A form for Gamma_0(p) carried by its expansions at both cusps; at_zero is
// the expansion at infinity of f|[W_p].  Parities: at_inf even, at_zero
// congruent to the weight.
template <class R>
struct PairForm {
    int k = 0;
    int l = 0;
    Scaled<R> at_inf;
    Scaled<R> at_zero;
};

template <class R>
void validate_pair(const PairForm<R>& f) {
    if (f.at_inf.half_exp % 2 != 0)
        throw std::invalid_argument("pair form: at_inf must have even scale parity");
    if (((f.at_zero.half_exp - f.k) % 2) != 0)
        throw std::invalid_argument("pair form: at_zero parity must match the weight");
}

// Multinomial coefficient (n; parts) modulo the prime p, by Lucas reduction
// to base-p digits.
unsigned multinomial_mod_p(long long n, const std::vector<long long>& parts, std::uint32_t p);

// Largest P with 1 + (P-2) q^d <= prec_in - 1 (and P >= 1): every reported
// output coefficient of U_p depends only on known input coefficients.
inline int up_output_prec(int prec_in, long long qd) {
    if (prec_in < 2) return prec_in < 1 ? 1 : 1;
    long long P = (prec_in - 2) / qd + 2;
    return static_cast<int>(P);
}

// Explicit coefficient formula for U_p:
//   a_j = sum_{i in N^{d+1}, |i| = j-1} multinom(j-1; i) c_n alpha^i pi^{i_0},
//   n = 1 + i_0 + i_1 q + ... + i_d q^d,
// evaluated exactly; a_0 = 0.
template <class R>
Series<R> up_direct_impl(const Series<R>& f, const PrimeModulus& pm, bool parallel) {
    const R& ring = f.ring;
    const Field& F = ring.field();
    const int d = pm.d();
    const int P = up_output_prec(f.prec, pm.qd());
    Series<R> out(ring, {}, P);
    if (P <= 1) return out;

    // power tables for pi and alpha_1..alpha_{d-1} (alpha_d = 1)
    int maxpow = P - 1;
    std::vector<std::vector<typename R::Elem>> pows(d);  // pows[0] = pi, pows[s] = alpha_s
    for (int s = 0; s < d; ++s) {
        Poly base = (s == 0) ? pm.pi() : pm.alpha(s);
        std::vector<typename R::Elem> tab(maxpow + 1, ring.one());
        typename R::Elem b = ring.embed_poly(base);
        for (int t = 1; t <= maxpow; ++t) tab[t] = ring.mul(tab[t - 1], b);
        pows[s] = std::move(tab);
    }
    std::vector<long long> qpow(d + 1, 1);
    for (int s = 1; s <= d; ++s) qpow[s] = qpow[s - 1] * F.q();

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int j = 1; j < P; ++j) {
        typename R::Elem acc = ring.zero();
        // enumerate (i_1, ..., i_d) with sum <= j-1; i_0 is then determined
        std::vector<long long> iv(d + 1, 0);
        // iterative odometer over iv[1..d]
        long long sum_hi = 0;      // i_1 + ... + i_d
        long long weight_hi = 0;   // i_1 q + ... + i_d q^d
        int pos = d;
        while (true) {
            long long i0 = (j - 1) - sum_hi;
            long long n = 1 + i0 + weight_hi;
            if (n < f.prec && !ring.is_zero(f.c[static_cast<int>(n)])) {
                iv[0] = i0;
                unsigned mc = multinomial_mod_p(j - 1, iv, F.p());
                if (mc != 0) {
                    typename R::Elem term = f.c[static_cast<int>(n)];
                    if (i0 > 0) term = ring.mul(term, pows[0][static_cast<std::size_t>(i0)]);
                    for (int s = 1; s < d; ++s)
                        if (iv[s] > 0)
                            term = ring.mul(term, pows[s][static_cast<std::size_t>(iv[s])]);
                    if (mc != 1) term = ring.scale_fq(term, F.from_int(mc));
                    acc = ring.add(acc, term);
                }
            }
            // advance odometer: increment iv[pos] keeping sum <= j-1
            pos = d;
            while (pos >= 1) {
                ++iv[pos];
                sum_hi += 1;
                weight_hi += qpow[pos];
                if (sum_hi <= j - 1) break;
                // reset this digit
                sum_hi -= iv[pos];
                weight_hi -= iv[pos] * qpow[pos];
                iv[pos] = 0;
                --pos;
            }
            if (pos < 1) break;
        }
        out.c[j] = std::move(acc);
    }
    (void)parallel;
    return out;
}

template <class R>
Series<R> up_direct_serial(const Series<R>& f, const PrimeModulus& pm) {
    return up_direct_impl(f, pm, false);
}

template <class R>
Series<R> up_direct(const Series<R>& f, const PrimeModulus& pm) {
    bool parallel = static_cast<long long>(f.prec) * pm.qd() > kParallelCutoff && max_threads() > 1;
    return up_direct_impl(f, pm, parallel);
}

// The inverse cyclotomic polynomial f_pi as an exact series in u.
template <class R>
Series<R> fpi_series(const R& ring, const PrimeModulus& pm, int prec) {
    const PolyInX& f = pm.inverse_cyclotomic();
    Series<R> r(ring, {}, prec);
    for (int i = 0; i < prec && i < static_cast<int>(f.size()); ++i)
        if (!f[i].is_zero()) r.c[i] = ring.embed_poly(f[i]);
    return r;
}

// f|V_p = f(u^{q^d} / f_pi(u)), exact to prec(f) * q^d; an optional cap
// limits the output precision (and the work) below that.
template <class R>
Series<R> vp_op(const Series<R>& f, const PrimeModulus& pm, long long cap = -1) {
    long long qd = pm.qd();
    long long target = static_cast<long long>(f.prec) * qd;
    if (cap >= 0 && cap < target) target = cap;
    if (target <= 0) return series_zero(f.ring, static_cast<int>(std::max<long long>(target, 0)));
    Series<R> in = f;
    long long need = target / qd + 1;
    if (need < f.prec) in = series_truncate(f, static_cast<int>(need));
    int wprec = static_cast<int>(std::max<long long>(target - qd, 1));
    Series<R> t = series_shift_u(series_invert_unit(fpi_series(f.ring, pm, wprec)),
                                 static_cast<int>(qd));
    if (t.prec > target) t = series_truncate(t, static_cast<int>(target));
    return series_substitute(in, t);
}

// Elementary symmetric values e_r of the reciprocals y_j = 1/gamma_j of the
// roots of rho_pi(x) - 1/u, read off the monic polynomial
// Q(y) = y^{q^d} - u f_pi(y), together with power sums from the
// division-free Newton recursion.
struct RootSymmetrics {
    const PrimeModulus* pm;
    std::vector<Series<KRing>> e;  // e[r-1] = e_r, 1 <= r <= q^d
    std::vector<Series<KRing>> p;  // p[n-1] = p_n, 1 <= n <= count
};

RootSymmetrics root_symmetrics(const PrimeModulus& pm, int count, int prec);

// Independent U_p oracle: f|U = (1/pi) sum_n c_n p_n.
Series<KRing> up_oracle_newton(const Series<KRing>& f, const PrimeModulus& pm);

// f|[W_p] for a full-level form: pi^{k/2} f|V_p.
template <class R>
Scaled<R> fricke_full_level(const FullForm<R>& F, const PrimeModulus& pm, long long cap = -1) {
    return scaled_make(pm, F.k, vp_op(F.series, pm, cap));
}

// The pair form of F|V_p: at_inf = F|V_p, at_zero = pi^{-k/2} F.
template <class R>
PairForm<R> lift_by_vp(const FullForm<R>& F, const PrimeModulus& pm, long long cap = -1) {
    return PairForm<R>{F.k, F.l, Scaled<R>{0, vp_op(F.series, pm, cap)},
                       scaled_make(pm, -F.k, F.series)};
}

template <class R>
PairForm<R> pair_mul(const PrimeModulus& pm, const PairForm<R>& f, const PairForm<R>& g) {
    int qm1 = static_cast<int>(pm.field().q()) - 1;
    int l = qm1 > 0 ? ((f.l + g.l) % qm1 + qm1) % qm1 : 0;
    return PairForm<R>{f.k + g.k, l, scaled_mul(pm, f.at_inf, g.at_inf),
                       scaled_mul(pm, f.at_zero, g.at_zero)};
}

template <class R>
PairForm<R> pair_pow(const PrimeModulus& pm, const PairForm<R>& f, long long n) {
    if (n < 1) throw std::invalid_argument("pair power needs n >= 1");
    PairForm<R> r = f;
    for (long long i = 1; i < n; ++i) r = pair_mul(pm, r, f);
    return r;
}

// (at_inf, at_zero) -> (at_zero, (-1)^k at_inf); applying it twice multiplies
// by (-1)^k.
template <class R>
PairForm<R> fricke_pair(const PrimeModulus& pm, const PairForm<R>& f) {
    fq sign = pm.field().from_int(f.k % 2 == 0 ? 1 : -1);
    return PairForm<R>{f.k, f.l, f.at_zero, scaled_scale_fq(f.at_inf, sign)};
}

// Tr(f) = f + pi^{1-k/2} (f|[W_p]) | U_p.
template <class R>
Scaled<R> trace_pair(const PrimeModulus& pm, const PairForm<R>& f) {
    validate_pair(f);
    Series<R> upped = up_direct(f.at_zero.body, pm);
    Scaled<R> term = scaled_make(pm, 2 - f.k + f.at_zero.half_exp, std::move(upped));
    return scaled_add(pm, f.at_inf, term);
}

// prod_j f(y_j) as the determinant of multiplication by f(y) on
// R[[u]][y]/(y^{q^d} - u f_pi(y)), reported to prec_out.  Input must be known
// to degree q^d * prec_out and (over K) must be pi-integral.
template <class R>
Series<R> norm_product_impl(const Series<R>& f, const PrimeModulus& pm, int prec_out,
                            const Limits& lim, bool parallel) {
    const R& ring = f.ring;
    long long qd = pm.qd();
    if (qd > lim.max_norm_dim)
        throw std::invalid_argument("q^d exceeds the norm determinant dimension limit");
    if (prec_out < 1) throw std::invalid_argument("norm needs output precision >= 1");
    if (static_cast<long long>(f.prec) <= qd * (prec_out - 1))
        throw std::invalid_argument("norm input precision below the q^d * prec_out rule");
    const int n = static_cast<int>(qd);

    // constraint: pi-integral coefficients (residue bodies are integral by type)
    if constexpr (std::is_same_v<R, KRing>) {
        if (ring.tag() == CoeffTag::rational) {
            for (int i = 0; i < f.prec; ++i)
                if (!f.c[i].is_zero() && v_pi(ring.field(), f.c[i], pm.pi()) < Val::of(0))
                    throw std::invalid_argument("norm requires pi-integral coefficients");
        }
    }

    // fold table: y^{q^d} = u * f_pi(y)
    const PolyInX& fpi = pm.inverse_cyclotomic();
    std::vector<std::pair<int, typename R::Elem>> fold;
    for (int s = 0; s < static_cast<int>(fpi.size()); ++s)
        if (!fpi[s].is_zero()) fold.emplace_back(s, ring.embed_poly(fpi[s]));

    auto fold_top = [&](std::vector<Series<R>>& h, const Series<R>& top) {
        // h += top * u * f_pi(y), distributing over y-degrees
        for (const auto& [s, elem] : fold) {
            Series<R> add = series_scale(top, elem);
            // multiply by u: shift coefficients up by one within the cap
            for (int k = prec_out - 1; k >= 1; --k)
                if (!ring.is_zero(add.c[k - 1]))
                    h[s].c[k] = ring.add(h[s].c[k], add.c[k - 1]);
        }
    };

    // reduce f(y) modulo Q by Horner over the y-degree
    long long D = std::min<long long>(f.prec - 1, qd * prec_out);
    std::vector<Series<R>> h(n, series_zero(ring, prec_out));
    for (long long m = D; m >= 0; --m) {
        // h <- h * y mod Q, then add the constant c_m
        Series<R> top = h[n - 1];
        for (int i = n - 1; i >= 1; --i) h[i] = std::move(h[i - 1]);
        h[0] = series_zero(ring, prec_out);
        if (!series_is_zero(top)) fold_top(h, top);
        if (!ring.is_zero(f.c[static_cast<int>(m)]))
            h[0].c[0] = ring.add(h[0].c[0], f.c[static_cast<int>(m)]);
    }

    // multiplication matrix: column j = h * y^j mod Q
    std::vector<std::vector<Series<R>>> M(n, std::vector<Series<R>>(n, series_zero(ring, prec_out)));
    std::vector<Series<R>> col = h;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) M[i][j] = col[i];
        if (j + 1 < n) {
            Series<R> top = col[n - 1];
            for (int i = n - 1; i >= 1; --i) col[i] = std::move(col[i - 1]);
            col[0] = series_zero(ring, prec_out);
            if (!series_is_zero(top)) fold_top(col, top);
        }
    }

    // determinant by minor expansion over column subsets, level by level
    std::vector<Series<R>> minors(static_cast<std::size_t>(1) << n, series_zero(ring, 0));
    minors[0] = series_one(ring, prec_out);
    std::vector<std::vector<unsigned>> by_level(n + 1);
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        by_level[__builtin_popcount(mask)].push_back(mask);
    for (int r = 1; r <= n; ++r) {
        const auto& masks = by_level[r];
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (std::size_t mi = 0; mi < masks.size(); ++mi) {
            unsigned mask = masks[mi];
            Series<R> acc = series_zero(ring, prec_out);
            int pos = 0;
            for (int j = 0; j < n; ++j) {
                if (!(mask & (1u << j))) continue;
                const Series<R>& entry = M[r - 1][j];
                if (!series_is_zero(entry)) {
                    Series<R> term =
                        series_mul_raw(entry, minors[mask ^ (1u << j)], prec_out, false);
                    acc = ((r - 1 + pos) % 2 == 0) ? series_add(acc, term)
                                                   : series_sub(acc, term);
                }
                ++pos;
            }
            minors[mask] = std::move(acc);
        }
    }
    (void)parallel;
    return minors[(1u << n) - 1];
}

template <class R>
Series<R> norm_product_serial(const Series<R>& f, const PrimeModulus& pm, int prec_out,
                              const Limits& lim = Limits{}) {
    return norm_product_impl(f, pm, prec_out, lim, false);
}

template <class R>
Series<R> norm_product(const Series<R>& f, const PrimeModulus& pm, int prec_out,
                       const Limits& lim = Limits{}) {
    bool parallel = pm.qd() >= 8 && prec_out >= 8 && max_threads() > 1;
    return norm_product_impl(f, pm, prec_out, lim, parallel);
}

// The leading-coefficient-1 multiple of N(f) for a Fricke eigenform:
// f_hat * prod_j f_hat(y_j), computed with denominators cleared.
template <class R>
Series<R> norm_tilde(const PrimeModulus& pm, const PairForm<R>& f, int alpha, int prec_out,
                     const Limits& lim = Limits{}) {
    validate_pair(f);
    if (alpha != 1 && alpha != -1) throw std::invalid_argument("alpha must be +1 or -1");
    if (((f.at_zero.half_exp - f.at_inf.half_exp) % 2) != 0)
        throw std::invalid_argument("eigen assertion fails: scale parities differ");
    Scaled<R> expected = scaled_scale_fq(f.at_inf, pm.field().from_int(alpha));
    Scaled<R> diff = scaled_sub(pm, f.at_zero, expected);
    if (diff.body.prec > 0 && !series_is_zero(diff.body))
        throw std::invalid_argument("eigen assertion fails: at_zero != alpha * at_inf");

    Series<R> g = scaled_to_series(pm, f.at_inf);
    auto og = series_ord(g);
    if (!og) throw std::invalid_argument("norm of a series with no known nonzero coefficient");
    const typename R::Elem& lead = g.c[*og];
    ValBound lv = g.ring.vp(lead, pm);
    if (!(lv.exact && lv.v == Val::of(0)))
        throw std::invalid_argument("norm requires a unit leading coefficient");
    Series<R> N = norm_product(g, pm, prec_out, lim);
    Series<R> r = series_truncate(series_mul(g, N), std::min(prec_out, series_mul_prec(g, N)));
    // rescale by lead^{-(q^d + 1)}; over K this leaves A, so promote first
    if constexpr (std::is_same_v<R, KRing>) {
        Series<KRing> pr = series_to_rational(r);
        Rat cinv = rat_inv(pr.ring.field(), lead);
        Rat scale = rat_from_int(pr.ring.field(), 1);
        for (long long i = 0; i <= pm.qd(); ++i) scale = rat_mul(pr.ring.field(), scale, cinv);
        return series_scale(pr, scale);
    } else {
        typename R::Elem cinv = g.ring.inv(lead);
        typename R::Elem scale = g.ring.one();
        for (long long i = 0; i <= pm.qd(); ++i) scale = g.ring.mul(scale, cinv);
        return series_scale(r, scale);
    }
}

// g_(0) = g_d^n - pi^{n(q^d-1)} (g_d^n | V_p), with its Fricke image
// pi^{n(q^d-1)/2} ((g_d^n | V_p) - g_d^n).
template <class R>
PairForm<R> build_g0(const PrimeModulus& pm, const Series<R>& gd, int n) {
    if (n < 1) throw std::invalid_argument("build_g0 needs n >= 1");
    long long k = n * (pm.qd() - 1);
    Series<R> gn = series_pow(gd, n);
    Series<R> v = vp_op(gn, pm, gn.prec);
    PairForm<R> r{static_cast<int>(k), 0,
                  Scaled<R>{0, series_sub(gn, series_mul_pi_pow(v, pm, k))},
                  scaled_make(pm, static_cast<int>(k), series_sub(v, gn))};
    Congruence c = series_congruent_mod(pm, r.at_inf.body, series_one(gd.ring, gn.prec), Val::of(1));
    if (c.verdict == Verdict::fail) throw std::logic_error("g_(0) != 1 (mod p)");
    ValBound vz = scaled_vp(pm, r.at_zero);
    if (vb_at_least(vz, Val::of_half(k + 2)) == Verdict::fail)
        throw std::logic_error("g_(0)|W_p valuation below n(q^d-1)/2 + 1");
    return r;
}

// g_(r) = g_(0)^{p^r}.
template <class R>
PairForm<R> build_gr(const PrimeModulus& pm, const PairForm<R>& g0, int r) {
    if (r < 0) throw std::invalid_argument("build_gr needs r >= 0");
    long long pr = 1;
    for (int i = 0; i < r; ++i) pr *= pm.field().p();
    PairForm<R> g = pair_pow(pm, g0, pr);
    Congruence c = series_congruent_mod(pm, scaled_to_series(pm, g.at_inf),
                                        series_one(g0.at_inf.body.ring, g.at_inf.body.prec),
                                        Val::of(pr));
    if (c.verdict == Verdict::fail) throw std::logic_error("g_(r) != 1 (mod p^{p^r})");
    ValBound vz = scaled_vp(pm, g.at_zero);
    if (vb_at_least(vz, Val::of_half(pr * g0.k + 2 * pr)) == Verdict::fail)
        throw std::logic_error("g_(r)|W_p valuation below n p^r (q^d-1)/2 + p^r");
    return g;
}

struct TraceBoundReport {
    ValBound lhs{Val::infinity(), true};
    Val bound = Val::of(0);
    bool bound_exact = true;
    int overlap = 0;
    Verdict verdict = Verdict::inconclusive;
};

// v_p(Tr(f g_(r)) - f) >= min{p^r + v_p(f), p^r + 1 - k/2 + v_p(f|W_p)}.
template <class R>
TraceBoundReport verify_tracemap_bound(const PrimeModulus& pm, const PairForm<R>& f,
                                       const PairForm<R>& gr, int r) {
    long long pr = 1;
    for (int i = 0; i < r; ++i) pr *= pm.field().p();
    PairForm<R> fg = pair_mul(pm, f, gr);
    Scaled<R> tr = trace_pair(pm, fg);
    Scaled<R> diff = scaled_sub(pm, tr, f.at_inf);
    TraceBoundReport rep;
    rep.overlap = diff.body.prec;
    ValBound vf = scaled_vp(pm, f.at_inf);
    ValBound vfw = scaled_vp(pm, f.at_zero);
    rep.bound_exact = vf.exact && vfw.exact;  // +inf is fine: the zero form passes trivially
    Val b1 = Val::of(pr) + vf.v;
    Val b2 = Val::of_half(2 * pr + 2 - f.k) + vfw.v;
    rep.bound = min(b1, b2);
    if (rep.overlap <= 0) return rep;
    rep.lhs = scaled_vp(pm, diff);
    rep.verdict = rep.bound_exact ? vb_at_least(rep.lhs, rep.bound) : Verdict::inconclusive;
    return rep;
}

}  // namespace carlitz

#endif
