#ifndef CARLITZ_FIXTURES_HPP
#define CARLITZ_FIXTURES_HPP

#include <string>

#include "carlitz/operators.hpp"

namespace carlitz {

// Carlitz factorials D_0 = 1, D_i = [i] D_{i-1}^q with [i] = T^{q^i} - T, and
// the Goss polynomials G_1..G_M of the recursion
//   G_n = X (G_{n-1} + sum_{i>=1} G_{n-q^i}/D_i),
// equivalently sum_k G_k(X) w^{k-1} = X / (1 - X e_C(w)) for
// e_C(w) = sum w^{q^i}/D_i.
struct GossTable {
    std::vector<Poly> bracket;            // bracket[i] = [i], index from 1
    std::vector<Poly> D;                  // D[i], index from 0
    std::vector<std::vector<Rat>> G;      // G[n] coefficients by X-degree, index from 1
};

GossTable goss_table(const Field& F, int M, const Limits& lim = Limits{});

// Least common multiple of all monics of degree k: [1][2]...[k].
Poly lk_poly(const Field& F, int k);

// u(az) = u^{q^deg a} / f_a(u), exact where reported.
template <class R>
Series<R> u_sub_a(const R& ring, const Poly& a, int prec) {
    if (a.is_zero()) throw std::invalid_argument("u_a needs a != 0");
    const Field& F = ring.field();
    long long qm = 1;
    for (int i = 0; i < a.degree(); ++i) qm *= F.q();
    if (qm >= prec) return series_zero(ring, prec);
    PolyInX fa = inverse_cyclotomic_of(F, a);
    Series<R> f(ring, {}, prec - static_cast<int>(qm));
    for (int i = 0; i < f.prec && i < static_cast<int>(fa.size()); ++i)
        if (!fa[i].is_zero()) f.c[i] = ring.embed_poly(fa[i]);
    return series_shift_u(series_invert_unit(f), static_cast<int>(qm));
}

// E = sum_{a monic} a u_a, the false Eisenstein series of weight 2 and type 1.
template <class R>
Series<R> false_eisenstein(const R& ring, int prec) {
    const Field& F = ring.field();
    Series<R> acc = series_zero(ring, prec);
    for (int m = 0;; ++m) {
        long long qm = 1;
        for (int i = 0; i < m; ++i) qm *= F.q();
        if (qm >= prec) break;
        for (const Poly& a : monic_polys_of_degree(F, m))
            acc = series_add(acc, series_scale(u_sub_a(ring, a, prec), ring.embed_poly(a)));
    }
    return acc;
}

// Goss's Eisenstein series g_k of weight q^k - 1 and type 0, assembled from
// the Goss table with all Carlitz-period factors cancelled.  Coefficients are
// checked to land in A.
FullForm<KRing> eisenstein_gk(const Field& F, int k, int prec, const Limits& lim = Limits{});

// The weight-2 type-1 form for Gamma_0(p): E - pi E|V_p, with expansion at 0
// given by -(E - pi E|V_p)|U_p (the weight-2 type-1 trace vanishes).
// Literature construction; validated through the congruences it satisfies.
template <class R>
PairForm<R> weight2_type1_fixture(const R& ring, const PrimeModulus& pm, int prec) {
    if (ring.field().q() < 3)
        throw std::invalid_argument("weight-2 type-1 fixture needs q >= 3");
    Series<R> e = false_eisenstein(ring, prec);
    Series<R> v = vp_op(e, pm, prec);
    Series<R> body = series_sub(e, series_mul_pi_pow(v, pm, 1));
    Scaled<R> at_zero{0, series_neg(up_direct(body, pm))};
    return PairForm<R>{2, 1, Scaled<R>{0, std::move(body)}, std::move(at_zero)};
}

// F + pi^{k/2} F|V_p: invariant under the Fricke involution by construction
// (k even so the scale is an honest power of pi).
template <class R>
PairForm<R> fricke_eigen_fixture(const FullForm<R>& F, const PrimeModulus& pm) {
    if (F.k % 2 != 0) throw std::invalid_argument("Fricke eigen fixture needs even weight");
    Series<R> v = vp_op(F.series, pm, F.series.prec);
    Series<R> body = series_add(F.series, series_mul_pi_pow(v, pm, F.k / 2));
    Scaled<R> at_inf{0, body};
    return PairForm<R>{F.k, F.l, std::move(at_inf), Scaled<R>{0, std::move(body)}};
}

struct GenusDim {
    long long genus = 0;
    long long dim_weight2_type1 = 0;
};

// genus of X_0(p): q(q^{d-1}-1)/(q^2-1) for odd d, q^2(q^{d-2}-1)/(q^2-1)
// for even d; the space of weight-2 type-1 forms has dimension genus + 1.
GenusDim genus_dimension(long long q, int d);

}  // namespace carlitz

#endif
