#include "carlitz/rational.hpp"

#include <stdexcept>

namespace carlitz {

Rat rat_from_poly(const Poly& p) {
    Rat r;
    r.num = p;
    return r;
}

Rat rat_from_int(const Field& F, long long n) { return rat_from_poly(poly_const(F.from_int(n))); }

Rat rat_make(const Field& F, Poly num, Poly den) {
    if (den.is_zero()) throw std::invalid_argument("rational with zero denominator");
    if (num.is_zero()) return Rat{};
    Poly g = poly_gcd(F, num, den);
    if (g.degree() > 0) {
        num = poly_divexact(F, num, g);
        den = poly_divexact(F, den, g);
    }
    fq s = F.inv(den.lead());
    Rat r;
    r.num = poly_mul_scalar(F, num, s);
    r.den = poly_mul_scalar(F, den, s);
    return r;
}

Rat rat_add(const Field& F, const Rat& a, const Rat& b) {
    if (a.is_integral() && b.is_integral()) {
        Rat r;
        r.num = poly_add(F, a.num, b.num);
        return r;
    }
    return rat_make(F, poly_add(F, poly_mul(F, a.num, b.den), poly_mul(F, b.num, a.den)),
                    poly_mul(F, a.den, b.den));
}

Rat rat_neg(const Field& F, const Rat& a) {
    Rat r = a;
    r.num = poly_neg(F, r.num);
    return r;
}

Rat rat_sub(const Field& F, const Rat& a, const Rat& b) { return rat_add(F, a, rat_neg(F, b)); }

Rat rat_mul(const Field& F, const Rat& a, const Rat& b) {
    if (a.is_zero() || b.is_zero()) return Rat{};
    if (a.is_integral() && b.is_integral()) {
        Rat r;
        r.num = poly_mul(F, a.num, b.num);
        return r;
    }
    // cross-reduce before multiplying to keep degrees down
    Rat x = rat_make(F, a.num, b.den);
    Rat y = rat_make(F, b.num, a.den);
    Rat r;
    r.num = poly_mul(F, x.num, y.num);
    r.den = poly_mul(F, x.den, y.den);
    return r;
}

Rat rat_inv(const Field& F, const Rat& a) {
    if (a.is_zero()) throw std::invalid_argument("inverse of zero rational");
    fq s = F.inv(a.num.lead());
    Rat r;
    r.num = poly_mul_scalar(F, a.den, s);
    r.den = poly_mul_scalar(F, a.num, s);
    return r;
}

Rat rat_div(const Field& F, const Rat& a, const Rat& b) { return rat_mul(F, a, rat_inv(F, b)); }

Rat rat_mul_scalar(const Field& F, const Rat& a, fq s) {
    if (s == 0) return Rat{};
    Rat r = a;
    r.num = poly_mul_scalar(F, r.num, s);
    return r;
}

Rat rat_pow(const Field& F, const Rat& a, long long n) {
    if (n < 0) return rat_pow(F, rat_inv(F, a), -n);
    Rat r = rat_from_int(F, 1);
    Rat base = a;
    while (n) {
        if (n & 1) r = rat_mul(F, r, base);
        base = rat_mul(F, base, base);
        n >>= 1;
    }
    return r;
}

std::pair<fq, long long> v_infty_decompose(const Field& F, const Rat& x) {
    if (x.is_zero()) throw std::invalid_argument("v_infty decomposition of zero");
    fq zeta = F.div(x.num.lead(), x.den.lead());
    long long v = static_cast<long long>(x.den.degree()) - x.num.degree();
    return {zeta, v};
}

long long poly_pi_order(const Field& F, const Poly& a, const Poly& pi) {
    if (a.is_zero()) throw std::invalid_argument("pi-order of zero polynomial");
    long long ord = 0;
    Poly cur = a;
    while (true) {
        auto [q, r] = poly_divrem(F, cur, pi);
        if (!r.is_zero()) return ord;
        cur = std::move(q);
        ++ord;
    }
}

Val v_pi(const Field& F, const Rat& x, const Poly& pi) {
    if (x.is_zero()) return Val::infinity();
    long long v = poly_pi_order(F, x.num, pi) - poly_pi_order(F, x.den, pi);
    return Val::of(v);
}

Poly reduce_mod_pi(const Field& F, const Poly& a, const Poly& pi) {
    return poly_rem(F, a, pi);
}

std::string rat_to_string(const Field& F, const Rat& a) {
    if (a.is_integral()) return poly_to_string(F, a.num);
    return "(" + poly_to_string(F, a.num) + ")/(" + poly_to_string(F, a.den) + ")";
}

}  // namespace carlitz
