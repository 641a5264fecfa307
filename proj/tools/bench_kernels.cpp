// Timing comparison between the serial reference kernels and their
// OpenMP-parallel counterparts: series multiplication, U_p, and the norm
// determinant.  Results must agree exactly; only the wall time differs.

#include <chrono>
#include <iostream>
#include <random>

#include "carlitz/operators.hpp"
#include "carlitz/parallel.hpp"

using namespace carlitz;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Series<KRing> random_series(const Field& F, std::mt19937_64& rng, int prec, int coeff_deg) {
    KRing ring(F, CoeffTag::integral);
    Series<KRing> f = series_zero(ring, prec);
    for (int i = 0; i < prec; ++i) {
        Poly p;
        for (int j = 0; j <= coeff_deg; ++j) p.c.push_back(static_cast<fq>(rng() % F.q()));
        poly_trim(p);
        f.c[i] = rat_from_poly(p);
    }
    return f;
}

template <class Fn>
double time_best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        fn();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int threads = argc > 1 ? std::atoi(argv[1]) : 0;
    set_threads(threads);
    std::cout << "threads: " << max_threads() << "\n";

    Field F(3, 1);
    std::mt19937_64 rng(42);

    {
        Series<KRing> a = random_series(F, rng, 400, 8);
        Series<KRing> b = random_series(F, rng, 400, 8);
        Series<KRing> ref = series_mul_serial(a, b);
        Series<KRing> par = series_mul_raw(a, b, series_mul_prec(a, b), true);
        bool ok = series_eq_window(ref, par, std::min(ref.prec, par.prec));
        double ts = time_best_of(3, [&] { series_mul_serial(a, b); });
        double tp = time_best_of(3, [&] { series_mul_raw(a, b, series_mul_prec(a, b), true); });
        std::cout << "series_mul prec=400: serial " << ts << " ms, parallel " << tp
                  << " ms, agree=" << (ok ? "yes" : "NO") << "\n";
    }

    {
        PrimeModulus pm(F, poly_parse(F, "T^2+1"));
        Series<KRing> f = random_series(F, rng, 600, 4);
        Series<KRing> ref = up_direct_serial(f, pm);
        Series<KRing> par = up_direct_impl(f, pm, true);
        bool ok = series_eq_window(ref, par, std::min(ref.prec, par.prec));
        double ts = time_best_of(3, [&] { up_direct_serial(f, pm); });
        double tp = time_best_of(3, [&] { up_direct_impl(f, pm, true); });
        std::cout << "up_direct prec=600 d=2: serial " << ts << " ms, parallel " << tp
                  << " ms, agree=" << (ok ? "yes" : "NO") << "\n";
    }

    {
        PrimeModulus pm(F, poly_parse(F, "T^2+1"));
        Limits lim;
        Series<KRing> f = random_series(F, rng, 9 * 10 + 1, 2);
        Series<KRing> ref = norm_product_serial(f, pm, 10, lim);
        Series<KRing> par = norm_product_impl(f, pm, 10, lim, true);
        bool ok = series_eq_window(ref, par, std::min(ref.prec, par.prec));
        double ts = time_best_of(3, [&] { norm_product_serial(f, pm, 10, lim); });
        double tp = time_best_of(3, [&] { norm_product_impl(f, pm, 10, lim, true); });
        std::cout << "norm_product q^d=9 prec=10: serial " << ts << " ms, parallel " << tp
                  << " ms, agree=" << (ok ? "yes" : "NO") << "\n";
    }
    return 0;
}
