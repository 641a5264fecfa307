// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Usage: acceptance [path-to-cli]   (the CLI path is needed for the
// byte-determinism criterion; ctest passes it automatically).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "brute_symfunc.hpp"
#include "carlitz/verify.hpp"

using namespace carlitz;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void line(int idx, const std::string& name, bool pass, const std::string& detail,
          double seconds) {
    if (!pass) ++failures;
    std::printf("%s  %2d. %-22s %s(%.1fs)\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                detail.empty() ? "" : (detail + " ").c_str(), seconds);
    std::fflush(stdout);
}

template <class Fn>
void criterion(int idx, const std::string& name, Fn&& fn) {
    auto t0 = Clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    line(idx, name, pass, detail, secs);
}

Series<KRing> random_integral_series(const Field& F, std::mt19937_64& rng, int prec, int max_ord,
                                     int coeff_deg) {
    KRing ring(F, CoeffTag::integral);
    Series<KRing> f = series_zero(ring, prec);
    int ord = static_cast<int>(rng() % (max_ord + 1));
    for (int i = ord; i < prec; ++i) {
        Poly p;
        int d = static_cast<int>(rng() % (coeff_deg + 1));
        for (int j = 0; j <= d; ++j) p.c.push_back(static_cast<fq>(rng() % F.q()));
        poly_trim(p);
        f.c[i] = rat_from_poly(p);
    }
    while (f.c[ord].is_zero()) {
        Poly p;
        for (int j = 0; j <= coeff_deg; ++j) p.c.push_back(static_cast<fq>(rng() % F.q()));
        poly_trim(p);
        f.c[ord] = rat_from_poly(p);
    }
    return f;
}

std::vector<Poly> criterion_primes(const Field& F) {
    // T, T+1, and the first irreducible quadratic (T^2+T+1 for q=2, T^2+1 for q=3)
    std::vector<Poly> pis;
    pis.push_back(poly_parse(F, "T"));
    pis.push_back(poly_parse(F, "T+1"));
    pis.push_back(monic_irreducibles_of_degree(F, 2).front());
    return pis;
}

bool run_cli(const std::string& cli, const std::string& args, const std::string& outfile) {
    std::string cmd = "\"" + cli + "\" " + args + " > " + outfile + " 2>&1";
    int rc = std::system(cmd.c_str());
    return rc == 0;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    Limits lim;

    criterion(1, "hayes-frobenius", [&](std::string& detail) {
        bool ok = true;
        long long cases = 0;
        for (int q : {2, 3, 4, 5}) {
            Field F(q == 4 ? 2 : q, q == 4 ? 2 : 1);
            int max_deg = q == 5 ? 2 : 3;
            CheckReport h = verify_hayes(F, max_deg, 2, lim);
            CheckReport fr = verify_frobenius(F, max_deg, lim);
            ok = ok && !h.failed() && !fr.failed() && h.overall == Verdict::pass &&
                 fr.overall == Verdict::pass;
            cases += static_cast<long long>(h.cases.size()) + fr.cases.size();
        }
        detail = std::to_string(cases) + " cases";
        return ok;
    });

    // criteria 2 and 3 share one random corpus of 204 series at prec 25
    bool oracle_ok = true, annihilation_ok = true;
    long long oracle_cases = 0;
    auto t23 = Clock::now();
    {
        std::mt19937_64 rng(0xC0FFEE);
        for (int q : {2, 3}) {
            Field F(q, 1);
            KRing ring(F, CoeffTag::integral);
            for (const Poly& pi : criterion_primes(F)) {
                PrimeModulus pm(F, pi);
                for (int t = 0; t < 34; ++t) {
                    Series<KRing> f = random_integral_series(F, rng, 25, 2, 2);
                    Series<KRing> direct = up_direct(f, pm);
                    Series<KRing> oracle = up_oracle_newton(f, pm);
                    int w = std::min(direct.prec, oracle.prec);
                    if (!series_eq_window(series_truncate(series_to_rational(direct), w),
                                          series_truncate(oracle, w), w))
                        oracle_ok = false;
                    if (series_vp(direct, pm).v < series_vp(f, pm).v) oracle_ok = false;
                    Series<KRing> v = vp_op(f, pm);
                    if (series_vp(v, pm).v < series_vp(f, pm).v) oracle_ok = false;
                    if (!series_is_zero(up_direct(v, pm))) annihilation_ok = false;
                    ++oracle_cases;
                }
            }
        }
    }
    double secs23 = std::chrono::duration<double>(Clock::now() - t23).count();
    line(2, "up-oracle-equality", oracle_ok, std::to_string(oracle_cases) + " series", secs23);
    line(3, "up-vp-annihilation", annihilation_ok, std::to_string(oracle_cases) + " series", 0.0);

    criterion(4, "normprop", [&](std::string& detail) {
        std::mt19937_64 rng(0xBEEF);
        bool ok = true;
        long long cases = 0;
        for (int q : {2, 3}) {
            Field F(q, 1);
            for (int d = 1; d <= 2; ++d) {
                Poly pi = monic_irreducibles_of_degree(F, d).front();
                PrimeModulus pm(F, pi);
                int prec_out = 12;
                int prec_in = static_cast<int>(pm.qd()) * prec_out + 1;
                for (int t = 0; t < 25; ++t) {
                    Series<KRing> f = random_integral_series(F, rng, prec_in, 3, 2);
                    Series<KRing> norm = norm_product(f, pm, prec_out, lim);
                    Congruence c = series_congruent_mod(
                        pm, series_to_rational(norm),
                        series_to_rational(series_truncate(f, prec_out)), Val::of(1));
                    if (c.verdict != Verdict::pass) ok = false;
                    auto ordf = series_ord(f);
                    if (*ordf < prec_out) {
                        Rat lead = rat_from_int(F, 1);
                        for (long long i = 0; i < pm.qd(); ++i) lead = rat_mul(F, lead, f.c[*ordf]);
                        if (series_ord(norm).value_or(-1) != *ordf) ok = false;
                        else if (!(norm.c[*ordf] == lead)) ok = false;
                    }
                    ++cases;
                }
            }
        }
        detail = std::to_string(cases) + " series";
        return ok;
    });

    criterion(5, "root-symmetrics", [&](std::string& detail) {
        bool ok = true;
        long long cases = 0;
        for (int q : {2, 3}) {
            Field F(q, 1);
            std::vector<Poly> pis;
            for (int d = 1; d <= 2; ++d)
                for (const Poly& pi : monic_irreducibles_of_degree(F, d)) pis.push_back(pi);
            CheckReport rep = verify_root_symmetrics(F, pis);
            ok = ok && rep.overall == Verdict::pass;
            cases += static_cast<long long>(rep.cases.size());
        }
        detail = std::to_string(cases) + " primes";
        return ok;
    });

    criterion(6, "conglemma", [&](std::string& detail) {
        bool ok = true;
        long long cases = 0;
        for (int p : {2, 3, 5}) {
            CheckReport rep = verify_conglemma(p, 12, lim);
            ok = ok && rep.overall == Verdict::pass;
            cases += static_cast<long long>(rep.cases.size());
        }
        // transition round-trip and brute-force oracle agreement for n <= 8
        for (int n = 1; n <= 8 && ok; ++n) {
            for (const Partition& lambda : partitions_of(n)) {
                brute::MPoly direct = brute::elem_e_partition(lambda, n);
                TransitionRow row = expand_e_in_m(lambda);
                brute::MPoly viaM;
                for (const auto& [mu, c] : row.coeffs)
                    viaM = brute::add(viaM, brute::scaled(brute::mono_m(mu, n), c));
                if (!(direct == viaM)) ok = false;
            }
            for (const Partition& mu : partitions_of(n)) {
                TransitionRow me = expand_m_in_e(mu);
                std::map<Partition, BigInt> acc;
                for (const auto& [nu, c] : me.coeffs) {
                    TransitionRow em = expand_e_in_m(nu);
                    for (const auto& [kappa, d2] : em.coeffs) {
                        acc[kappa] += c * d2;
                        if (acc[kappa] == 0) acc.erase(kappa);
                    }
                }
                if (acc.size() != 1 || acc.begin()->first != mu || acc.begin()->second != 1)
                    ok = false;
            }
        }
        detail = std::to_string(cases) + " (r,m) pairs + oracle n<=8";
        return ok;
    });

    criterion(7, "gd-congruence", [&](std::string& detail) {
        bool ok = true;
        long long cases = 0;
        for (int q : {2, 3}) {
            Field F(q, 1);
            for (int d = 1; d <= 2; ++d) {
                CheckReport rep = verify_gd_congruence(F, d, lim);
                ok = ok && rep.overall == Verdict::pass;
                cases += static_cast<long long>(rep.cases.size());
            }
        }
        detail = std::to_string(cases) + " primes, integrality checked at construction";
        return ok;
    });

    criterion(8, "tracemap-bound", [&](std::string& detail) {
        bool ok = true;
        std::string parts;
        Field F(3, 1);
        for (const char* pi_text : {"T", "T^2+1"}) {
            CheckReport rep =
                verify_tracemap(F, poly_parse(F, pi_text), 1, {0, 1}, 6, 8, lim);
            for (const CheckCase& c : rep.cases) {
                if (c.verdict != Verdict::pass) ok = false;
                parts += std::string(pi_text) + ":r" + c.params[3].second + " v=" + c.valuation +
                         " bound=" + c.bound + "; ";
            }
        }
        detail = parts;
        return ok;
    });

    criterion(9, "trace-theorem", [&](std::string& detail) {
        bool ok = true;
        std::string parts;
        Field F(3, 1);
        for (const char* pi_text : {"T", "T+1", "T+2", "T^2+1"}) {
            CheckReport rep = verify_trace_theorem(F, poly_parse(F, pi_text), 15, 2, lim);
            for (const CheckCase& c : rep.cases)
                if (c.verdict != Verdict::pass) ok = false;
            parts += std::string(pi_text) + " ";
        }
        // belt and suspenders: the same congruence with exact K coefficients
        // at one degree-1 prime
        CheckReport exact = verify_trace_theorem_exact(F, poly_parse(F, "T"), 15, lim);
        if (exact.overall != Verdict::pass) ok = false;
        detail = "pi in {" + parts + "}, overlap >= 15, exact lane at T";
        return ok;
    });

    criterion(10, "norm-theorem", [&](std::string& detail) {
        bool ok = true;
        Field F(3, 1);
        for (const char* pi_text : {"T", "T^2+1"}) {
            CheckReport rep = verify_norm_theorem(F, poly_parse(F, pi_text), 10, 2, lim);
            if (rep.overall != Verdict::pass) ok = false;
        }
        detail = "lead=1, integral, congruent to fhat^2 at prec 10";
        return ok;
    });

    criterion(11, "cli-determinism", [&](std::string& detail) {
        if (cli.empty()) {
            detail = "no CLI path given";
            return false;
        }
        bool ok = true;
        // two independent reruns of a randomized verify and an expand
        ok = ok && run_cli(cli, "verify conglemma --p 3 --max-n 9 --format json", "det_a1.json");
        ok = ok && run_cli(cli, "verify conglemma --p 3 --max-n 9 --format json", "det_a2.json");
        ok = ok && run_cli(cli,
                           "verify up-oracle-equality --q 3 --max-deg 2 --count 3 --prec 20 "
                           "--seed 99 --format json",
                           "det_b1.json");
        ok = ok && run_cli(cli,
                           "verify up-oracle-equality --q 3 --max-deg 2 --count 3 --prec 20 "
                           "--seed 99 --format json",
                           "det_b2.json");
        ok = ok && run_cli(cli, "expand g-k --q 3 --k 1 --prec 12 --format json", "det_c1.json");
        ok = ok && run_cli(cli, "expand g-k --q 3 --k 1 --prec 12 --format json", "det_c2.json");
        if (!ok) {
            detail = "CLI invocation failed";
            return false;
        }
        bool same = slurp("det_a1.json") == slurp("det_a2.json") &&
                    slurp("det_b1.json") == slurp("det_b2.json") &&
                    slurp("det_c1.json") == slurp("det_c2.json") &&
                    !slurp("det_a1.json").empty();
        detail = same ? "byte-identical reruns" : "outputs differ between runs";
        return same;
    });

    std::printf("%s: %d of 11 criteria passed\n", failures == 0 ? "OK" : "FAILURES",
                11 - failures);
    return failures == 0 ? 0 : 1;
}
