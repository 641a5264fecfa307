#include "carlitz/fixtures.hpp"

namespace carlitz {

Poly lk_poly(const Field& F, int k) {
    Poly r = poly_one();
    long long qi = 1;
    for (int i = 1; i <= k; ++i) {
        qi *= F.q();
        // [i] = T^{q^i} - T
        Poly bracket;
        bracket.c.assign(qi + 1, 0);
        bracket.c[1] = F.from_int(-1);
        bracket.c[qi] = 1;
        r = poly_mul(F, r, bracket);
    }
    return r;
}

GossTable goss_table(const Field& F, int M, const Limits& lim) {
    if (M < 1) throw std::invalid_argument("Goss table needs M >= 1");
    if (M > lim.max_goss_index)
        throw std::invalid_argument("Goss index exceeds the configured limit");
    GossTable t;
    t.bracket.push_back(Poly{});  // unused index 0
    t.D.push_back(poly_one());
    long long qi = 1;
    for (int i = 1; qi <= M; ++i) {
        qi *= F.q();
        Poly bracket;
        bracket.c.assign(qi + 1, 0);
        bracket.c[1] = F.from_int(-1);
        bracket.c[qi] = 1;
        t.bracket.push_back(bracket);
        Poly prev_q = poly_pow(F, t.D.back(), F.q());
        t.D.push_back(poly_mul(F, bracket, prev_q));
        if (qi > M) break;
    }
    t.G.resize(M + 1);
    t.G[1] = {Rat{}, rat_from_int(F, 1)};  // G_1 = X
    for (int n = 2; n <= M; ++n) {
        // S = G_{n-1} + sum_{i >= 1} G_{n-q^i}/D_i
        std::vector<Rat> S = t.G[n - 1];
        long long step = 1;
        for (int i = 1; i < static_cast<int>(t.D.size()); ++i) {
            step *= F.q();
            if (n - step < 1) break;
            Rat dinv = rat_make(F, poly_one(), t.D[i]);
            const std::vector<Rat>& g = t.G[static_cast<int>(n - step)];
            if (S.size() < g.size()) S.resize(g.size(), Rat{});
            for (std::size_t j = 0; j < g.size(); ++j)
                if (!g[j].is_zero()) S[j] = rat_add(F, S[j], rat_mul(F, g[j], dinv));
        }
        std::vector<Rat> gn(S.size() + 1, Rat{});
        for (std::size_t j = 0; j < S.size(); ++j) gn[j + 1] = S[j];
        t.G[n] = std::move(gn);
    }
    return t;
}

FullForm<KRing> eisenstein_gk(const Field& F, int k, int prec, const Limits& lim) {
    if (k < 1) throw std::invalid_argument("eisenstein_gk needs k >= 1");
    if (prec < 1 || prec > lim.max_prec) throw std::invalid_argument("precision out of range");
    long long s = 1;
    for (int i = 0; i < k; ++i) {
        s *= F.q();
        if (s - 1 > lim.max_goss_index)
            throw std::invalid_argument("q^k - 1 exceeds the configured Goss limit");
    }
    s -= 1;  // weight
    GossTable goss = goss_table(F, static_cast<int>(s), lim);
    KRing kring(F, CoeffTag::rational);

    // b_{s} = coefficient of w^s in the reciprocal of e_C(w)/w = sum w^{q^i-1}/D_i
    Series<KRing> ec(kring, {}, static_cast<int>(s) + 1);
    long long qi = 1;
    for (int i = 0; qi - 1 <= s; ++i) {
        ec.c[static_cast<int>(qi - 1)] = rat_make(F, poly_one(), goss.D[i]);
        qi *= F.q();
        if (i + 1 >= static_cast<int>(goss.D.size()) && qi - 1 <= s) {
            // D table ran short (cannot happen: D covers q^i <= M = s)
            throw std::logic_error("Goss factorial table too short");
        }
    }
    Series<KRing> rec = series_invert_unit(ec);
    Rat b = rec.c[static_cast<int>(s)];
    Rat c_k = (F.q() % 2 == 0) ? b : rat_neg(F, b);  // (-1)^{q^k} b

    // sum over monic a of G_s(u_a)
    const std::vector<Rat>& gs = goss.G[static_cast<int>(s)];
    Series<KRing> sum = series_zero(kring, prec);
    for (int m = 0;; ++m) {
        long long qm = 1;
        for (int i = 0; i < m; ++i) qm *= F.q();
        if (qm > prec) break;
        for (const Poly& a : monic_polys_of_degree(F, m)) {
            Series<KRing> ua = u_sub_a(kring, a, prec);
            if (series_is_zero(ua)) continue;
            // evaluate G_s at ua, walking the (sparse) exponent list upward
            Series<KRing> val = series_zero(kring, prec);
            Series<KRing> power = series_one(kring, prec);
            int cur = 0;
            for (std::size_t j = 1; j < gs.size(); ++j) {
                if (gs[j].is_zero()) continue;
                long long needed_ord = static_cast<long long>(j) * qm;
                if (needed_ord >= prec) break;
                while (cur < static_cast<int>(j)) {
                    power = series_mul_raw(power, ua, prec, false);
                    ++cur;
                }
                val = series_add(val, series_scale(power, gs[j]));
            }
            sum = series_add(sum, val);
        }
    }

    Series<KRing> body = series_neg(sum);
    body.c[0] = rat_add(F, body.c[0], c_k);
    Rat scale = rat_from_poly(lk_poly(F, k));
    if (k % 2 == 0) scale = rat_neg(F, scale);  // (-1)^{k+1} L_k
    body = series_scale(body, scale);

    // throws if any coefficient escapes A
    return FullForm<KRing>{static_cast<int>(s), 0, series_to_integral(body)};
}

GenusDim genus_dimension(long long q, int d) {
    if (d < 1) throw std::invalid_argument("genus formula needs d >= 1");
    GenusDim g;
    auto power = [&](long long base, int e) {
        long long r = 1;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };
    if (d % 2 == 1)
        g.genus = q * (power(q, d - 1) - 1) / (q * q - 1);
    else
        g.genus = q * q * (power(q, d - 2) - 1) / (q * q - 1);
    g.dim_weight2_type1 = g.genus + 1;
    return g;
}

}  // namespace carlitz
