#include "carlitz/operators.hpp"

namespace carlitz {

unsigned multinomial_mod_p(long long n, const std::vector<long long>& parts, std::uint32_t p) {
    long long total = 0;
    for (long long x : parts) {
        if (x < 0) return 0;
        total += x;
    }
    if (total != n) return 0;
    // small factorials mod p
    std::vector<unsigned> fact(p, 1);
    for (std::uint32_t i = 2; i < p; ++i)
        fact[i] = static_cast<unsigned>(static_cast<unsigned long long>(fact[i - 1]) * i % p);
    auto inv_mod = [&](unsigned a) {
        unsigned r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1) r = static_cast<unsigned>(static_cast<unsigned long long>(r) * b % p);
            b = static_cast<unsigned>(static_cast<unsigned long long>(b) * b % p);
            e >>= 1;
        }
        return r;
    };
    std::vector<long long> rem = parts;
    unsigned result = 1;
    while (n > 0) {
        long long nd = n % p;
        long long sum_d = 0;
        unsigned denom = 1;
        for (auto& x : rem) {
            long long xd = x % p;
            sum_d += xd;
            denom = static_cast<unsigned>(static_cast<unsigned long long>(denom) * fact[xd] % p);
            x /= p;
        }
        if (sum_d != nd) return 0;  // carry: coefficient vanishes mod p
        result = static_cast<unsigned>(static_cast<unsigned long long>(result) * fact[nd] % p);
        result = static_cast<unsigned>(static_cast<unsigned long long>(result) * inv_mod(denom) % p);
        n /= p;
    }
    return result;
}

RootSymmetrics root_symmetrics(const PrimeModulus& pm, int count, int prec) {
    if (count < 1) throw std::invalid_argument("root_symmetrics needs count >= 1");
    const Field& F = pm.field();
    KRing ring(F, CoeffTag::integral);
    long long qd = pm.qd();
    const PolyInX& fpi = pm.inverse_cyclotomic();

    RootSymmetrics rs;
    rs.pm = &pm;
    rs.e.reserve(qd);
    for (long long r = 1; r <= qd; ++r) {
        Series<KRing> er(ring, {}, prec);
        std::size_t idx = static_cast<std::size_t>(qd - r);
        if (prec > 1 && idx < fpi.size() && !fpi[idx].is_zero()) {
            fq sign = F.from_int(r % 2 == 1 ? 1 : -1);
            er.c[1] = rat_from_poly(poly_mul_scalar(F, fpi[idx], sign));
        }
        rs.e.push_back(std::move(er));
    }

    rs.p.reserve(count);
    for (int n = 1; n <= count; ++n) {
        Series<KRing> pn = series_zero(ring, prec);
        for (int r = 1; r < n && r <= qd; ++r) {
            Series<KRing> term = series_mul_raw(rs.e[r - 1], rs.p[n - r - 1], prec, false);
            pn = (r % 2 == 1) ? series_add(pn, term) : series_sub(pn, term);
        }
        if (n <= qd) {
            fq sc = F.from_int((n % 2 == 1 ? 1 : -1) * static_cast<long long>(n));
            pn = series_add(pn, series_scale_fq(rs.e[n - 1], sc));
        }
        rs.p.push_back(std::move(pn));
    }
    return rs;
}

Series<KRing> up_oracle_newton(const Series<KRing>& f, const PrimeModulus& pm) {
    const Field& F = f.ring.field();
    long long qd = pm.qd();
    int P = f.prec >= 1 ? static_cast<int>((f.prec - 1) / qd) + 1 : 0;
    KRing kring(F, CoeffTag::rational);
    Series<KRing> acc = series_zero(kring, P);
    if (P == 0) return acc;
    int count = static_cast<int>(std::min<long long>(f.prec - 1, static_cast<long long>(P - 1) * qd));
    if (count >= 1) {
        RootSymmetrics rs = root_symmetrics(pm, count, P);
        for (int n = 1; n <= count; ++n) {
            if (f.c[n].is_zero()) continue;
            Series<KRing> term = series_scale(series_to_rational(rs.p[n - 1]), f.c[n]);
            acc = series_add(acc, term);
        }
    }
    // c_0 contributes (1/pi) q^d c_0 = 0 in characteristic p
    return series_mul_pi_pow(acc, pm, -1);
}

}  // namespace carlitz
