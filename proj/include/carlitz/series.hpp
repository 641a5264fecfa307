#ifndef CARLITZ_SERIES_HPP
#define CARLITZ_SERIES_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "carlitz/carlitz_module.hpp"
#include "carlitz/parallel.hpp"
#include "carlitz/rational.hpp"

namespace carlitz {

enum class Verdict { pass, fail, inconclusive };
std::string verdict_str(Verdict v);

// Coefficient universes for truncated u-series.  Operations never mix rings:
// A-tagged series stay in A (checked), K-tagged series live in F_q(T), and
// the residue ring A/pi^M backs the deep congruence pipelines where exact
// coefficients would blow up.  All three satisfy the same ring-handle
// interface used by the generic kernels below.

enum class CoeffTag { integral, rational };

class KRing {
public:
    using Elem = Rat;
    static constexpr bool kFoldsScale = true;

    KRing(const Field& F, CoeffTag tag = CoeffTag::rational) : F_(&F), tag_(tag) {}

    const Field& field() const { return *F_; }
    CoeffTag tag() const { return tag_; }
    bool operator==(const KRing& o) const { return *F_ == *o.F_ && tag_ == o.tag_; }
    bool operator!=(const KRing& o) const { return !(*this == o); }

    Elem zero() const { return Rat{}; }
    Elem one() const { return rat_from_int(*F_, 1); }
    Elem from_int(long long n) const { return rat_from_int(*F_, n); }
    Elem embed_poly(const Poly& p) const { return rat_from_poly(p); }
    Elem embed_rat(const Rat& r) const { return checked(r); }

    Elem add(const Elem& a, const Elem& b) const { return checked(rat_add(*F_, a, b)); }
    Elem sub(const Elem& a, const Elem& b) const { return checked(rat_sub(*F_, a, b)); }
    Elem neg(const Elem& a) const { return rat_neg(*F_, a); }
    Elem mul(const Elem& a, const Elem& b) const { return checked(rat_mul(*F_, a, b)); }
    Elem scale_fq(const Elem& a, fq s) const { return rat_mul_scalar(*F_, a, s); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool elem_eq(const Elem& a, const Elem& b) const { return a == b; }

    bool is_unit(const Elem& a) const {
        if (a.is_zero()) return false;
        if (tag_ == CoeffTag::integral) return a.is_integral() && a.num.degree() == 0;
        return true;
    }
    Elem inv(const Elem& a) const {
        if (!is_unit(a)) throw std::invalid_argument("non-unit coefficient inverse");
        return rat_inv(*F_, a);
    }

    Elem mul_pi_pow(const Elem& a, const PrimeModulus& pm, long long j) const {
        if (a.is_zero() || j == 0) return a;
        Rat pw = rat_from_poly(pm.pi_pow(static_cast<int>(j < 0 ? -j : j)));
        if (j < 0) pw = rat_inv(*F_, pw);
        Rat r = rat_mul(*F_, a, pw);
        if (tag_ == CoeffTag::integral && !r.is_integral())
            throw std::logic_error("pi power left the integral coefficient ring");
        return r;
    }

    ValBound vp(const Elem& a, const PrimeModulus& pm) const {
        return {v_pi(*F_, a, pm.pi()), true};
    }

private:
    const Field* F_;
    CoeffTag tag_;

    Elem checked(Rat r) const {
        if (tag_ == CoeffTag::integral && !r.is_integral())
            throw std::logic_error("operation left the integral coefficient ring");
        return r;
    }
};

// A/pi^M with M "pi-digits": elements are polynomials of degree < M*deg(pi).
// v_p reads off exactly when an element is nonzero; zero elements only give
// the lower bound M.
class ResidueRing {
public:
    using Elem = Poly;
    static constexpr bool kFoldsScale = false;

    ResidueRing(const PrimeModulus& pm, int digits) {
        if (digits < 1) throw std::invalid_argument("residue ring needs at least one digit");
        auto ctx = std::make_shared<Ctx>();
        ctx->pm = &pm;
        ctx->digits = digits;
        ctx->modulus = pm.pi_pow(digits);
        ctx_ = std::move(ctx);
    }

    const PrimeModulus& pm() const { return *ctx_->pm; }
    int digits() const { return ctx_->digits; }
    const Poly& modulus() const { return ctx_->modulus; }
    const Field& field() const { return ctx_->pm->field(); }
    bool operator==(const ResidueRing& o) const {
        return ctx_->pm->pi() == o.ctx_->pm->pi() && ctx_->digits == o.ctx_->digits;
    }
    bool operator!=(const ResidueRing& o) const { return !(*this == o); }

    Elem zero() const { return Poly{}; }
    Elem one() const { return poly_one(); }
    Elem from_int(long long n) const { return reduce(poly_const(field().from_int(n))); }
    Elem embed_poly(const Poly& p) const { return reduce(p); }
    Elem embed_rat(const Rat& r) const {
        if (r.is_zero()) return Poly{};
        if (r.is_integral()) return reduce(r.num);
        Poly dinv = poly_invmod(field(), poly_rem(field(), r.den, modulus()), modulus());
        return reduce(poly_mul(field(), r.num, dinv));
    }

    Elem add(const Elem& a, const Elem& b) const { return poly_add(field(), a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return poly_sub(field(), a, b); }
    Elem neg(const Elem& a) const { return poly_neg(field(), a); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(poly_mul(field(), a, b)); }
    Elem scale_fq(const Elem& a, fq s) const { return poly_mul_scalar(field(), a, s); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool elem_eq(const Elem& a, const Elem& b) const { return a == b; }

    bool is_unit(const Elem& a) const {
        return !a.is_zero() && !poly_divides(field(), ctx_->pm->pi(), a);
    }
    Elem inv(const Elem& a) const {
        if (!is_unit(a)) throw std::invalid_argument("non-unit coefficient inverse");
        return poly_invmod(field(), a, modulus());
    }

    Elem mul_pi_pow(const Elem& a, const PrimeModulus& pm_in, long long j) const {
        if (j < 0) throw std::logic_error("negative pi power inside a residue body");
        (void)pm_in;
        if (a.is_zero() || j == 0) return a;
        return reduce(poly_mul(field(), a, ctx_->pm->pi_pow(static_cast<int>(j))));
    }

    ValBound vp(const Elem& a, const PrimeModulus& pm_in) const {
        (void)pm_in;
        if (a.is_zero()) return {Val::of(ctx_->digits), false};
        return {Val::of(poly_pi_order(field(), a, ctx_->pm->pi())), true};
    }

private:
    struct Ctx {
        const PrimeModulus* pm;
        int digits;
        Poly modulus;
    };
    std::shared_ptr<const Ctx> ctx_;

    Elem reduce(const Poly& p) const { return poly_rem(field(), p, modulus()); }
};

// Power series in u known modulo u^prec: exactly prec stored coefficients.
template <class R>
struct Series {
    R ring;
    std::vector<typename R::Elem> c;
    int prec = 0;

    Series(const R& r, std::vector<typename R::Elem> coeffs, int p) : ring(r), c(std::move(coeffs)), prec(p) {
        if (p < 0) throw std::invalid_argument("negative precision");
        c.resize(p, ring.zero());
    }
    explicit Series(const R& r) : ring(r) {}

    const typename R::Elem& coeff(int i) const { return c[static_cast<std::size_t>(i)]; }
};

template <class R>
Series<R> series_zero(const R& ring, int prec) {
    return Series<R>(ring, {}, prec);
}

template <class R>
Series<R> series_one(const R& ring, int prec) {
    Series<R> r(ring, {}, prec);
    if (prec > 0) r.c[0] = ring.one();
    return r;
}

// u itself
template <class R>
Series<R> series_u(const R& ring, int prec) {
    Series<R> r(ring, {}, prec);
    if (prec > 1) r.c[1] = ring.one();
    return r;
}

template <class R>
std::optional<int> series_ord(const Series<R>& f) {
    for (int i = 0; i < f.prec; ++i)
        if (!f.ring.is_zero(f.c[i])) return i;
    return std::nullopt;
}

template <class R>
bool series_is_zero(const Series<R>& f) {
    return !series_ord(f).has_value();
}

template <class R>
Series<R> series_truncate(const Series<R>& f, int prec) {
    if (prec > f.prec) throw std::invalid_argument("cannot extend series precision");
    Series<R> r(f.ring, {}, prec);
    for (int i = 0; i < prec; ++i) r.c[i] = f.c[i];
    return r;
}

template <class R>
void require_same_ring(const Series<R>& f, const Series<R>& g) {
    if (f.ring != g.ring) throw std::invalid_argument("series coefficient ring mismatch");
}

template <class R>
Series<R> series_add(const Series<R>& f, const Series<R>& g) {
    require_same_ring(f, g);
    int prec = std::min(f.prec, g.prec);
    Series<R> r(f.ring, {}, prec);
    for (int i = 0; i < prec; ++i) r.c[i] = f.ring.add(f.c[i], g.c[i]);
    return r;
}

template <class R>
Series<R> series_neg(const Series<R>& f) {
    Series<R> r = f;
    for (auto& x : r.c) x = f.ring.neg(x);
    return r;
}

template <class R>
Series<R> series_sub(const Series<R>& f, const Series<R>& g) {
    require_same_ring(f, g);
    int prec = std::min(f.prec, g.prec);
    Series<R> r(f.ring, {}, prec);
    for (int i = 0; i < prec; ++i) r.c[i] = f.ring.sub(f.c[i], g.c[i]);
    return r;
}

// Convolution of the known windows, reported to the cap; the caller asserts
// (by the contract of its precision rule) that unknown tails cannot reach
// coefficients below the cap.
template <class R>
Series<R> series_mul_raw(const Series<R>& f, const Series<R>& g, int cap, bool parallel) {
    Series<R> r(f.ring, {}, cap);
    const int pf = f.prec, pg = g.prec;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
#endif
    for (int k = 0; k < cap; ++k) {
        typename R::Elem acc = f.ring.zero();
        int lo = std::max(0, k - pg + 1);
        int hi = std::min(k, pf - 1);
        for (int i = lo; i <= hi; ++i) {
            if (f.ring.is_zero(f.c[i]) || f.ring.is_zero(g.c[k - i])) continue;
            acc = f.ring.add(acc, f.ring.mul(f.c[i], g.c[k - i]));
        }
        r.c[k] = std::move(acc);
    }
    (void)parallel;
    return r;
}

// Output precision: min(prec_f + ord(g), prec_g + ord(f), prec_f + prec_g),
// with ord = 0 when no known coefficient is nonzero.
template <class R>
int series_mul_prec(const Series<R>& f, const Series<R>& g) {
    int of = series_ord(f).value_or(0);
    int og = series_ord(g).value_or(0);
    long long p = std::min<long long>(
        {static_cast<long long>(f.prec) + og, static_cast<long long>(g.prec) + of,
         static_cast<long long>(f.prec) + g.prec});
    return static_cast<int>(p);
}

template <class R>
Series<R> series_mul_serial(const Series<R>& f, const Series<R>& g) {
    require_same_ring(f, g);
    return series_mul_raw(f, g, series_mul_prec(f, g), false);
}

template <class R>
Series<R> series_mul(const Series<R>& f, const Series<R>& g) {
    require_same_ring(f, g);
    int cap = series_mul_prec(f, g);
    bool parallel = static_cast<long long>(cap) * std::max(f.prec, g.prec) > kParallelCutoff &&
                    max_threads() > 1;
    return series_mul_raw(f, g, cap, parallel);
}

template <class R>
Series<R> series_scale(const Series<R>& f, const typename R::Elem& s) {
    Series<R> r = f;
    for (auto& x : r.c) x = f.ring.mul(x, s);
    return r;
}

template <class R>
Series<R> series_scale_fq(const Series<R>& f, fq s) {
    Series<R> r = f;
    for (auto& x : r.c) x = f.ring.scale_fq(x, s);
    return r;
}

template <class R>
Series<R> series_shift_u(const Series<R>& f, int k) {
    if (k < 0) throw std::invalid_argument("negative u-shift");
    Series<R> r(f.ring, {}, f.prec + k);
    for (int i = 0; i < f.prec; ++i) r.c[i + k] = f.c[i];
    return r;
}

template <class R>
Series<R> series_mul_pi_pow(const Series<R>& f, const PrimeModulus& pm, long long j) {
    Series<R> r = f;
    for (auto& x : r.c) x = f.ring.mul_pi_pow(x, pm, j);
    return r;
}

template <class R>
Series<R> series_pow(const Series<R>& f, long long n) {
    if (n < 0) throw std::invalid_argument("negative series power");
    Series<R> r = series_one(f.ring, f.prec);
    Series<R> base = f;
    bool first = true;
    while (n) {
        if (n & 1) {
            r = first ? base : series_mul(r, base);
            first = false;
        }
        n >>= 1;
        if (n) base = series_mul(base, base);
    }
    return r;
}

// f * invert_unit(f) = 1 to the precision of f; requires a unit constant term.
template <class R>
Series<R> series_invert_unit(const Series<R>& f) {
    if (f.prec < 1) throw std::invalid_argument("cannot invert a series with no known coefficients");
    if (!f.ring.is_unit(f.c[0]))
        throw std::invalid_argument("series inverse requires a unit constant term");
    typename R::Elem c0inv = f.ring.inv(f.c[0]);
    std::vector<int> support;
    for (int i = 1; i < f.prec; ++i)
        if (!f.ring.is_zero(f.c[i])) support.push_back(i);
    Series<R> g(f.ring, {}, f.prec);
    g.c[0] = c0inv;
    for (int n = 1; n < f.prec; ++n) {
        typename R::Elem acc = f.ring.zero();
        for (int k : support) {
            if (k > n) break;
            acc = f.ring.add(acc, f.ring.mul(f.c[k], g.c[n - k]));
        }
        g.c[n] = f.ring.neg(f.ring.mul(c0inv, acc));
    }
    return g;
}

// f(t) for ord(t) >= 1, to precision min(prec_t, prec_f * ord(t)).
// Powers of t are built incrementally and the loop stops as soon as t^i
// vanishes below the cap.
template <class R>
Series<R> series_substitute(const Series<R>& f, const Series<R>& t) {
    require_same_ring(f, t);
    auto ot = series_ord(t);
    if (t.prec >= 1 && ot.has_value() && *ot == 0)
        throw std::invalid_argument("substitution needs ord(t) >= 1");
    long long m = ot ? *ot : t.prec;  // all-zero window: treated as ord = prec
    if (m < 1) m = 1;
    long long capll = std::min<long long>(t.prec, static_cast<long long>(f.prec) * m);
    int cap = static_cast<int>(capll);
    Series<R> r(f.ring, {}, cap);
    if (cap == 0) return r;
    if (f.prec > 0 && !f.ring.is_zero(f.c[0])) r.c[0] = f.c[0];
    Series<R> tp = series_truncate(t, cap);  // t^1
    for (int i = 1; i < f.prec; ++i) {
        if (static_cast<long long>(i) * m >= cap) break;
        if (i > 1) tp = series_mul_raw(tp, t, cap, false);
        if (!f.ring.is_zero(f.c[i])) {
            for (int k = 0; k < cap; ++k)
                if (!f.ring.is_zero(tp.c[k]))
                    r.c[k] = f.ring.add(r.c[k], f.ring.mul(f.c[i], tp.c[k]));
        }
    }
    return r;
}

template <class R>
bool series_eq_window(const Series<R>& f, const Series<R>& g, int window) {
    if (f.prec < window || g.prec < window) return false;
    for (int i = 0; i < window; ++i)
        if (!f.ring.elem_eq(f.c[i], g.c[i])) return false;
    return true;
}

inline ValBound vb_min(const ValBound& a, const ValBound& b) {
    if (a.exact && b.exact) return {min(a.v, b.v), true};
    if (a.exact && !b.exact) return a.v <= b.v ? a : ValBound{b.v, false};
    if (!a.exact && b.exact) return b.v <= a.v ? b : ValBound{a.v, false};
    return {min(a.v, b.v), false};
}

// min over the known window of the coefficient valuations (+inf for an empty
// or identically-zero window over K).
template <class R>
ValBound series_vp(const Series<R>& f, const PrimeModulus& pm) {
    ValBound acc{Val::infinity(), true};
    for (int i = 0; i < f.prec; ++i) acc = vb_min(acc, f.ring.vp(f.c[i], pm));
    return acc;
}

inline Verdict vb_at_least(const ValBound& v, Val m) {
    if (v.v >= m) return Verdict::pass;
    return v.exact ? Verdict::fail : Verdict::inconclusive;
}

Series<ResidueRing> reduce_series(const Series<KRing>& f, const ResidueRing& ring);
Series<KRing> series_to_rational(const Series<KRing>& f);
Series<KRing> series_to_integral(const Series<KRing>& f);

// pi^{half_exp/2} * body.  Over K the even part of the scale is folded into
// the body, so half_exp ends up in {0,1}; residue bodies keep the full scale
// symbolically because folding negative powers would need divisions.
template <class R>
struct Scaled {
    int half_exp = 0;
    Series<R> body;
};

template <class R>
Scaled<R> scaled_make(const PrimeModulus& pm, int half_exp, Series<R> body) {
    if constexpr (R::kFoldsScale) {
        int fold = (half_exp >= 0) ? half_exp / 2 : -((-half_exp + 1) / 2);
        if (fold != 0) {
            if (fold < 0) body = series_to_rational(body);
            body = series_mul_pi_pow(body, pm, fold);
            half_exp -= 2 * fold;
        }
    }
    return Scaled<R>{half_exp, std::move(body)};
}

template <class R>
Scaled<R> scaled_neg(const Scaled<R>& a) {
    return Scaled<R>{a.half_exp, series_neg(a.body)};
}

template <class R>
Scaled<R> scaled_add(const PrimeModulus& pm, const Scaled<R>& a, const Scaled<R>& b) {
    if (((a.half_exp - b.half_exp) % 2) != 0)
        throw std::invalid_argument("scale parity mismatch in addition");
    int h = std::min(a.half_exp, b.half_exp);
    Series<R> ab = a.body, bb = b.body;
    if (a.half_exp > h) ab = series_mul_pi_pow(ab, pm, (a.half_exp - h) / 2);
    if (b.half_exp > h) bb = series_mul_pi_pow(bb, pm, (b.half_exp - h) / 2);
    return scaled_make(pm, h, series_add(ab, bb));
}

template <class R>
Scaled<R> scaled_sub(const PrimeModulus& pm, const Scaled<R>& a, const Scaled<R>& b) {
    return scaled_add(pm, a, scaled_neg(b));
}

template <class R>
Scaled<R> scaled_mul(const PrimeModulus& pm, const Scaled<R>& a, const Scaled<R>& b) {
    return scaled_make(pm, a.half_exp + b.half_exp, series_mul(a.body, b.body));
}

template <class R>
Scaled<R> scaled_scale_fq(const Scaled<R>& a, fq s) {
    return Scaled<R>{a.half_exp, series_scale_fq(a.body, s)};
}

template <class R>
ValBound scaled_vp(const PrimeModulus& pm, const Scaled<R>& a) {
    ValBound b = series_vp(a.body, pm);
    if (b.v.inf) return b;
    return {Val::of_half(b.v.half + a.half_exp), b.exact};
}

// The honest series underlying a parity-0 scaled series.
template <class R>
Series<R> scaled_to_series(const PrimeModulus& pm, const Scaled<R>& a) {
    if (a.half_exp % 2 != 0)
        throw std::invalid_argument("scaled series with odd parity is not a series over K");
    if (a.half_exp == 0) return a.body;
    return series_mul_pi_pow(a.body, pm, a.half_exp / 2);
}

struct Congruence {
    Verdict verdict = Verdict::inconclusive;
    int overlap = 0;
    ValBound achieved{Val::infinity(), true};
};

// v_p(f - g) >= m on the overlap window.  Mismatched scale parities are
// compared by valuation alone (a half-integer part cannot cancel against an
// integer part).
template <class R>
Congruence congruent_mod(const PrimeModulus& pm, const Scaled<R>& f, const Scaled<R>& g, Val m) {
    Congruence out;
    if (((f.half_exp - g.half_exp) % 2) != 0) {
        out.overlap = std::min(f.body.prec, g.body.prec);
        out.achieved = vb_min(scaled_vp(pm, f), scaled_vp(pm, g));
        out.verdict = out.overlap > 0 ? vb_at_least(out.achieved, m) : Verdict::inconclusive;
        return out;
    }
    Scaled<R> diff = scaled_sub(pm, f, g);
    out.overlap = diff.body.prec;
    if (out.overlap <= 0) {
        out.verdict = Verdict::inconclusive;
        return out;
    }
    out.achieved = scaled_vp(pm, diff);
    out.verdict = vb_at_least(out.achieved, m);
    return out;
}

template <class R>
Congruence series_congruent_mod(const PrimeModulus& pm, const Series<R>& f, const Series<R>& g,
                                Val m) {
    return congruent_mod(pm, Scaled<R>{0, f}, Scaled<R>{0, g}, m);
}

}  // namespace carlitz

#endif
