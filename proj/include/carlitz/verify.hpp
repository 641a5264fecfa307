#ifndef CARLITZ_VERIFY_HPP
#define CARLITZ_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "carlitz/fixtures.hpp"
#include "carlitz/symfunc.hpp"

namespace carlitz {

struct CheckCase {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    Verdict verdict = Verdict::inconclusive;
    std::string valuation;  // half-integers as strings, "3/2"
    std::string bound;
    std::string detail;
};

struct CheckReport {
    std::string check;
    std::vector<CheckCase> cases;
    Verdict overall = Verdict::pass;  // fail if any case fails

    void add(CheckCase c);
    bool failed() const { return overall == Verdict::fail; }
};

// Section 2.1: Hayes Eisenstein property and the Frobenius congruence, over
// all monic irreducibles of degree <= max_deg and 1 <= n <= max_n.
CheckReport verify_hayes(const Field& F, int max_deg, int max_n, const Limits& lim = Limits{});
CheckReport verify_frobenius(const Field& F, int max_deg, const Limits& lim = Limits{});

// g_d == 1 (mod p) for every monic prime of degree d, at precision >= 2 q^d.
CheckReport verify_gd_congruence(const Field& F, int d, const Limits& lim = Limits{});

// Random integral series: up_direct == up_oracle_newton exactly,
// v_p(f|U) >= v_p(f), v_p(f|V) >= v_p(f), and U_p(V_p(f)) = 0.
CheckReport verify_up_oracle(const Field& F, const std::vector<Poly>& pis, int count, int prec,
                             std::uint64_t seed);

// Proposition normprop on random integral series with leading index <= 3:
// norm == f (mod p) and leading coefficient = (lead f)^{q^d}.
CheckReport verify_normprop(const Field& F, const std::vector<Poly>& pis, int count, int prec_out,
                            std::uint64_t seed, const Limits& lim = Limits{});

// e_r == 0 (mod pi) for 1 <= r < q^d and e_{q^d} = u.
CheckReport verify_root_symmetrics(const Field& F, const std::vector<Poly>& pis);

// Lemma conglemma for all (r, m) with m p^r <= max_n.
CheckReport verify_conglemma(int p, int max_n, const Limits& lim = Limits{});

// Trace valuation bound for f = lift_by_vp(g^2), with g_(r) built from g_d.
CheckReport verify_tracemap(const Field& F, const Poly& pi, int n, const std::vector<int>& rs,
                            int target_prec, int digits, const Limits& lim = Limits{});

// Trace correspondence: Tr(f_E g_(0)) == f_E (mod p) at overlap >= min_overlap,
// and Tr(f_E) == 0 on its window.
CheckReport verify_trace_theorem(const Field& F, const Poly& pi, int min_overlap, int digits,
                                 const Limits& lim = Limits{});

// Same congruence computed entirely over exact K coefficients (feasible for
// degree-1 primes at this overlap).
CheckReport verify_trace_theorem_exact(const Field& F, const Poly& pi, int min_overlap,
                                       const Limits& lim = Limits{});

// Norm congruence on the Fricke eigen fixture built from g^2 (d = 1) or g_2
// (d = 2): integral, leading coefficient 1, == f_hat^2 (mod p).
CheckReport verify_norm_theorem(const Field& F, const Poly& pi, int prec, int digits,
                                const Limits& lim = Limits{});

}  // namespace carlitz

#endif
