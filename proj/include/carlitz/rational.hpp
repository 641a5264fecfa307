#ifndef CARLITZ_RATIONAL_HPP
#define CARLITZ_RATIONAL_HPP

#include <string>
#include <utility>

#include "carlitz/poly.hpp"
#include "carlitz/valuation.hpp"

namespace carlitz {

// Element of K = F_q(T) in canonical form: monic denominator, gcd(num, den) = 1.
// A embeds in K only through rat_from_poly; there is no implicit coercion.
struct Rat {
    Poly num;
    Poly den;  // monic, nonzero

    Rat() : den(poly_one()) {}

    bool is_zero() const { return num.is_zero(); }
    bool is_integral() const { return den.degree() == 0; }

    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
};

Rat rat_from_poly(const Poly& p);
Rat rat_from_int(const Field& F, long long n);
// num/den reduced to canonical form; den != 0.
Rat rat_make(const Field& F, Poly num, Poly den);

Rat rat_add(const Field& F, const Rat& a, const Rat& b);
Rat rat_sub(const Field& F, const Rat& a, const Rat& b);
Rat rat_neg(const Field& F, const Rat& a);
Rat rat_mul(const Field& F, const Rat& a, const Rat& b);
Rat rat_div(const Field& F, const Rat& a, const Rat& b);
Rat rat_inv(const Field& F, const Rat& a);
Rat rat_mul_scalar(const Field& F, const Rat& a, fq s);
Rat rat_pow(const Field& F, const Rat& a, long long n);

// x = zeta * (1/T)^v * u_x with zeta in F_q^* and u_x a 1-unit at infinity.
// Returns (zeta, v = deg den - deg num).  Zero input is a domain error.
std::pair<fq, long long> v_infty_decompose(const Field& F, const Rat& x);

// Exact order of pi in x; +infinity for x = 0.
Val v_pi(const Field& F, const Rat& x, const Poly& pi);
// Order of pi in a nonzero polynomial.
long long poly_pi_order(const Field& F, const Poly& a, const Poly& pi);

// Remainder of a modulo pi (degree < deg pi).
Poly reduce_mod_pi(const Field& F, const Poly& a, const Poly& pi);

std::string rat_to_string(const Field& F, const Rat& a);

}  // namespace carlitz

#endif
