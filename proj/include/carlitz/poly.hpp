#ifndef CARLITZ_POLY_HPP
#define CARLITZ_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "carlitz/field.hpp"

namespace carlitz {

// Element of A = F_q[T].  Coefficients low-to-high, no stored leading zeros;
// the zero polynomial is the empty vector and has degree -1.
struct Poly {
    std::vector<fq> c;

    Poly() = default;
    explicit Poly(std::vector<fq> coeffs) : c(std::move(coeffs)) {}

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    fq coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    fq lead() const { return c.empty() ? 0 : c.back(); }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // Total order used for canonical maps: by degree, then coefficients from the top.
    bool operator<(const Poly& o) const {
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        for (std::size_t i = c.size(); i-- > 0;)
            if (c[i] != o.c[i]) return c[i] < o.c[i];
        return false;
    }
};

Poly poly_zero();
Poly poly_one();
Poly poly_const(fq a);
Poly poly_T();                      // the generator T
Poly poly_from_ints(const Field& F, const std::vector<long long>& coeffs);

void poly_trim(Poly& a);
Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_neg(const Field& F, const Poly& a);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_mul_scalar(const Field& F, const Poly& a, fq s);
Poly poly_shift(const Poly& a, int k);                    // multiply by T^k
Poly poly_pow(const Field& F, Poly a, long long n);
fq poly_eval(const Field& F, const Poly& a, fq x);

// Division with remainder; b != 0.
std::pair<Poly, Poly> poly_divrem(const Field& F, const Poly& a, const Poly& b);
Poly poly_rem(const Field& F, const Poly& a, const Poly& b);
bool poly_divides(const Field& F, const Poly& b, const Poly& a);  // b | a
// Exact quotient; throws if the division leaves a remainder.
Poly poly_divexact(const Field& F, const Poly& a, const Poly& b);

Poly poly_monic(const Field& F, const Poly& a);           // a != 0
Poly poly_gcd(const Field& F, Poly a, Poly b);            // monic (or zero)
// g = gcd(a, b) monic together with u, v such that u*a + v*b = g.
struct PolyXgcd {
    Poly g, u, v;
};
PolyXgcd poly_xgcd(const Field& F, const Poly& a, const Poly& b);
// Inverse of a modulo m; gcd(a, m) must be 1.
Poly poly_invmod(const Field& F, const Poly& a, const Poly& m);

bool poly_is_monic(const Poly& a);
// Irreducibility over F_q for monic f with deg f >= 1 (Frobenius gcd ladder).
bool poly_is_irreducible(const Field& F, const Poly& f);

// All monic polynomials of the given degree, in a fixed enumeration order
// (coefficient odometer, low digit fastest).
std::vector<Poly> monic_polys_of_degree(const Field& F, int deg);
std::vector<Poly> monic_irreducibles_of_degree(const Field& F, int deg);

std::string poly_to_string(const Field& F, const Poly& a, const std::string& var = "T");
// Parses sums of integer-coefficient monomials such as "T^2+2*T+1" or "[[1],[0],[1]]"
// (the JSON digit-vector form).
Poly poly_parse(const Field& F, const std::string& text);

}  // namespace carlitz

#endif
