#include "carlitz/carlitz_module.hpp"

#include <stdexcept>

#include "carlitz/rational.hpp"

namespace carlitz {

void additive_trim(AdditivePoly& a) {
    while (!a.beta.empty() && a.beta.back().is_zero()) a.beta.pop_back();
}

AdditivePoly additive_add(const Field& F, const AdditivePoly& a, const AdditivePoly& b) {
    AdditivePoly r;
    r.beta.resize(std::max(a.beta.size(), b.beta.size()));
    for (std::size_t i = 0; i < r.beta.size(); ++i)
        r.beta[i] = poly_add(F, a.coeff(i), b.coeff(i));
    additive_trim(r);
    return r;
}

namespace {

// q^k-th power of a polynomial: (sum c_m T^m)^{q^k} = sum c_m^{q^k} T^{m q^k}
Poly poly_frobenius_pow(const Field& F, const Poly& a, int k) {
    if (k == 0 || a.is_zero()) return a;
    long long e = 1;
    for (int i = 0; i < k; ++i) e *= F.q();
    Poly r;
    r.c.assign(static_cast<std::size_t>(a.degree()) * e + 1, 0);
    for (std::size_t m = 0; m < a.c.size(); ++m)
        if (a.c[m] != 0) r.c[m * e] = F.pow(a.c[m], e);
    return r;
}

}  // namespace

AdditivePoly additive_compose(const Field& F, const AdditivePoly& a, const AdditivePoly& b) {
    // (sum_i a_i x^{q^i}) o (sum_j b_j x^{q^j}) = sum_k (sum_{i+j=k} a_i b_j^{q^i}) x^{q^k}
    if (a.is_zero() || b.is_zero()) return {};
    AdditivePoly r;
    r.beta.assign(a.beta.size() + b.beta.size() - 1, Poly{});
    for (std::size_t i = 0; i < a.beta.size(); ++i) {
        if (a.beta[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.beta.size(); ++j) {
            if (b.beta[j].is_zero()) continue;
            Poly term = poly_mul(F, a.beta[i], poly_frobenius_pow(F, b.beta[j], static_cast<int>(i)));
            r.beta[i + j] = poly_add(F, r.beta[i + j], term);
        }
    }
    additive_trim(r);
    return r;
}

bool additive_equal(const AdditivePoly& a, const AdditivePoly& b) {
    return a.beta == b.beta;
}

AdditivePoly carlitz_action(const Field& F, const Poly& a) {
    if (a.is_zero()) return {};
    AdditivePoly rho_t;
    rho_t.beta = {poly_T(), poly_one()};
    // Horner over the digits of a: rho_(b*T + c) = rho_b o rho_T + c*x.
    AdditivePoly r;
    r.beta = {poly_const(a.lead())};
    for (int j = a.degree() - 1; j >= 0; --j) {
        r = additive_compose(F, r, rho_t);
        fq c = a.coeff(j);
        if (c != 0) {
            AdditivePoly constant;
            constant.beta = {poly_const(c)};
            r = additive_add(F, r, constant);
        }
    }
    return r;
}

PolyInX additive_to_plain(const AdditivePoly& a, const Field& F) {
    PolyInX r;
    if (a.is_zero()) return r;
    long long deg = 1;
    for (int i = 0; i < a.frobenius_degree(); ++i) deg *= F.q();
    r.assign(deg + 1, Poly{});
    long long e = 1;
    for (std::size_t i = 0; i < a.beta.size(); ++i) {
        r[e] = a.beta[i];
        e *= F.q();
    }
    return r;
}

PolyInX inverse_cyclotomic_of(const Field& F, const Poly& a) {
    if (a.is_zero()) throw std::invalid_argument("inverse cyclotomic of zero");
    AdditivePoly rho = carlitz_action(F, a);
    long long qm = 1;
    for (int i = 0; i < rho.frobenius_degree(); ++i) qm *= F.q();
    PolyInX f(qm, Poly{});
    if (rho.frobenius_degree() == 0) {
        // constant a: rho_a = a x, f_a = a
        f.assign(1, rho.beta[0]);
        return f;
    }
    long long e = 1;
    for (std::size_t i = 0; i < rho.beta.size(); ++i) {
        f[qm - e] = rho.beta[i];
        e *= F.q();
    }
    // f has degree q^m - 1; drop stored leading zeros
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

std::string poly_in_x_to_string(const Field& F, const PolyInX& a, const std::string& var) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string cs = poly_to_string(F, a[i]);
        bool parens = cs.find('+') != std::string::npos;
        if (i == 0) {
            s += parens ? "(" + cs + ")" : cs;
            continue;
        }
        if (a[i] != poly_one()) s += (parens ? "(" + cs + ")" : cs) + "*";
        s += (i == 1) ? var : var + "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

std::string additive_to_string(const Field& F, const AdditivePoly& a) {
    if (a.is_zero()) return "0";
    std::string s;
    long long e = 1;
    for (std::size_t i = 0; i < a.beta.size(); ++i) {
        if (!a.beta[i].is_zero()) {
            if (!s.empty()) s += " + ";
            std::string cs = poly_to_string(F, a.beta[i]);
            bool parens = cs.find('+') != std::string::npos;
            if (a.beta[i] == poly_one()) {
                s += (e == 1) ? "x" : "x^" + std::to_string(e);
            } else {
                s += (parens ? "(" + cs + ")" : cs);
                s += (e == 1) ? "*x" : "*x^" + std::to_string(e);
            }
        }
        e *= F.q();
    }
    return s;
}

PrimeModulus::PrimeModulus(const Field& F, Poly pi) : F_(&F), pi_(std::move(pi)) {
    if (!poly_is_monic(pi_) || pi_.degree() < 1)
        throw std::invalid_argument("prime modulus must be monic of degree >= 1");
    if (!poly_is_irreducible(F, pi_))
        throw std::invalid_argument("prime modulus must be irreducible");
    d_ = pi_.degree();
    qd_ = 1;
    for (int i = 0; i < d_; ++i) qd_ *= F.q();
    rho_ = carlitz_action(F, pi_);
    if (rho_.frobenius_degree() != d_ || rho_.coeff(0) != pi_ || rho_.coeff(d_) != poly_one())
        throw std::logic_error("Carlitz data violates rho_pi shape");
    for (int i = 1; i < d_; ++i)
        if (!poly_divides(F, pi_, rho_.coeff(i)))
            throw std::logic_error("Carlitz coefficient not divisible by pi");
    f_pi_ = inverse_cyclotomic_of(F, pi_);
    if (f_pi_.empty() || f_pi_[0] != poly_one())
        throw std::logic_error("inverse cyclotomic polynomial must have constant term 1");
}

Poly PrimeModulus::pi_pow(int j) const {
    if (j < 0) throw std::invalid_argument("negative pi power");
    return poly_pow(*F_, pi_, j);
}

namespace {

// Long division of dense x-polynomials with A coefficients; the divisor must
// be monic in the sense that its leading coefficient is a unit of A.
std::pair<PolyInX, PolyInX> poly_in_x_divrem(const Field& F, PolyInX rem, const PolyInX& div) {
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    PolyInX divisor = div;
    while (!divisor.empty() && divisor.back().is_zero()) divisor.pop_back();
    if (divisor.empty()) throw std::invalid_argument("division by zero polynomial");
    if (divisor.back().degree() != 0)
        throw std::invalid_argument("divisor leading coefficient must be a unit");
    fq lead_inv = F.inv(divisor.back().c[0]);
    if (rem.size() < divisor.size()) return {{}, rem};
    int dd = static_cast<int>(divisor.size()) - 1;
    int rd = static_cast<int>(rem.size()) - 1;
    PolyInX quo(rd - dd + 1, Poly{});
    for (int k = rd; k >= dd; --k) {
        if (rem[k].is_zero()) continue;
        Poly qc = poly_mul_scalar(F, rem[k], lead_inv);
        int shift = k - dd;
        quo[shift] = qc;
        for (int i = 0; i <= dd; ++i) {
            if (divisor[i].is_zero()) continue;
            rem[shift + i] = poly_sub(F, rem[shift + i], poly_mul(F, qc, divisor[i]));
        }
    }
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    return {quo, rem};
}

}  // namespace

bool hayes_eisenstein_check(const PrimeModulus& pm, int n, const Limits& lim) {
    if (n < 1) throw std::invalid_argument("hayes check requires n >= 1");
    const Field& F = pm.field();
    long long qnd = 1;
    for (int i = 0; i < n * pm.d(); ++i) {
        qnd *= F.q();
        if (qnd > lim.max_carlitz_degree)
            throw std::invalid_argument("q^{nd} exceeds the configured Carlitz degree limit");
    }
    Poly pi_n = pm.pi_pow(n);
    Poly pi_n1 = pm.pi_pow(n - 1);
    PolyInX dividend = additive_to_plain(carlitz_action(F, pi_n), F);
    PolyInX divisor = additive_to_plain(carlitz_action(F, pi_n1), F);
    auto [quo, rem] = poly_in_x_divrem(F, dividend, divisor);
    if (!rem.empty()) throw std::logic_error("rho_{pi^n} not divisible by rho_{pi^{n-1}}");
    // Eisenstein at pi: monic, all non-leading coefficients divisible by pi,
    // constant coefficient of pi-valuation exactly 1.
    if (quo.empty() || quo.back() != poly_one()) return false;
    if (quo[0].is_zero() || poly_pi_order(F, quo[0], pm.pi()) != 1) return false;
    for (std::size_t i = 0; i + 1 < quo.size(); ++i) {
        if (quo[i].is_zero()) continue;
        if (!poly_divides(F, pm.pi(), quo[i])) return false;
    }
    return true;
}

bool frobenius_congruence_check(const PrimeModulus& pm) {
    const Field& F = pm.field();
    const AdditivePoly& rho = pm.rho();
    for (int i = 0; i < pm.d(); ++i)
        if (!poly_divides(F, pm.pi(), rho.coeff(i))) return false;
    return rho.coeff(pm.d()) == poly_one();
}

}  // namespace carlitz
