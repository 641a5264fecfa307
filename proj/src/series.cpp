#include "carlitz/series.hpp"

namespace carlitz {

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "inconclusive";
    }
}

Series<ResidueRing> reduce_series(const Series<KRing>& f, const ResidueRing& ring) {
    Series<ResidueRing> r(ring, {}, f.prec);
    for (int i = 0; i < f.prec; ++i) r.c[i] = ring.embed_rat(f.c[i]);
    return r;
}

Series<KRing> series_to_rational(const Series<KRing>& f) {
    if (f.ring.tag() == CoeffTag::rational) return f;
    KRing k(f.ring.field(), CoeffTag::rational);
    return Series<KRing>(k, f.c, f.prec);
}

Series<KRing> series_to_integral(const Series<KRing>& f) {
    KRing a(f.ring.field(), CoeffTag::integral);
    Series<KRing> r(a, {}, f.prec);
    for (int i = 0; i < f.prec; ++i) {
        if (!f.c[i].is_integral())
            throw std::invalid_argument("series has non-integral coefficients");
        r.c[i] = f.c[i];
    }
    return r;
}

}  // namespace carlitz
