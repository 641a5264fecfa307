#ifndef CARLITZ_CARLITZ_MODULE_HPP
#define CARLITZ_CARLITZ_MODULE_HPP

#include <string>
#include <vector>

#include "carlitz/limits.hpp"
#include "carlitz/poly.hpp"

namespace carlitz {

// F_q-linear polynomial beta_0 x + beta_1 x^q + ... + beta_r x^{q^r}.
// Only q-power exponents are representable; kept separate from plain
// polynomials in x so the support invariant cannot be violated.
struct AdditivePoly {
    std::vector<Poly> beta;  // beta[i] multiplies x^{q^i}; beta.back() != 0 unless zero

    bool is_zero() const { return beta.empty(); }
    int frobenius_degree() const { return static_cast<int>(beta.size()) - 1; }
    Poly coeff(std::size_t i) const { return i < beta.size() ? beta[i] : Poly{}; }
};

void additive_trim(AdditivePoly& a);
AdditivePoly additive_add(const Field& F, const AdditivePoly& a, const AdditivePoly& b);
// Composition a(b(x)); the ring multiplication of End(G_a).
AdditivePoly additive_compose(const Field& F, const AdditivePoly& a, const AdditivePoly& b);
bool additive_equal(const AdditivePoly& a, const AdditivePoly& b);

// rho_a for a in A, from rho_T(x) = T x + x^q by F_q-linearity and
// Horner composition over the digits of a.
AdditivePoly carlitz_action(const Field& F, const Poly& a);

// Dense polynomial in an auxiliary variable, coefficients in A.  Used for
// the Eisenstein quotients and for f_pi.
using PolyInX = std::vector<Poly>;  // index = X-degree

PolyInX additive_to_plain(const AdditivePoly& a, const Field& F);
std::string poly_in_x_to_string(const Field& F, const PolyInX& a, const std::string& var = "x");

// a = X^{q^deg a} rho_a(X^{-1}); constant term equals the leading coefficient
// of a (so 1 for monic a).
PolyInX inverse_cyclotomic_of(const Field& F, const Poly& a);

// Monic prime pi with its cached Carlitz data.  Immutable; construction
// validates irreducibility, beta_0 = pi, beta_d = 1, and the Hayes corollary
// divisibilities pi | beta_i for 0 < i < d.
class PrimeModulus {
public:
    PrimeModulus(const Field& F, Poly pi);

    const Field& field() const { return *F_; }
    const Poly& pi() const { return pi_; }
    int d() const { return d_; }
    long long qd() const { return qd_; }  // q^d
    const AdditivePoly& rho() const { return rho_; }
    // alpha_i of rho_pi(x) = pi x + sum alpha_i x^{q^i} + x^{q^d}, 1 <= i <= d
    // (alpha_d = 1).
    Poly alpha(int i) const { return rho_.coeff(i); }
    const PolyInX& inverse_cyclotomic() const { return f_pi_; }
    Poly pi_pow(int j) const;

    bool operator==(const PrimeModulus& o) const { return F_ == o.F_ && pi_ == o.pi_; }

private:
    const Field* F_;
    Poly pi_;
    int d_;
    long long qd_;
    AdditivePoly rho_;
    PolyInX f_pi_;
};

// rho_{pi^n}/rho_{pi^{n-1}} by exact division; true iff the quotient is
// Eisenstein at pi (monic, non-leading coefficients divisible by pi,
// constant coefficient of exact pi-valuation 1).  A nonzero remainder in the
// division aborts: it would mean the Carlitz data itself is wrong.
bool hayes_eisenstein_check(const PrimeModulus& pm, int n, const Limits& lim = Limits{});

// rho_pi(x) == x^{q^d} (mod pi): pi | beta_i for 0 <= i <= d-1.
bool frobenius_congruence_check(const PrimeModulus& pm);

std::string additive_to_string(const Field& F, const AdditivePoly& a);

}  // namespace carlitz

#endif
