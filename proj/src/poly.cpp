#include "carlitz/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace carlitz {

Poly poly_zero() { return Poly{}; }
Poly poly_one() { return Poly{{1}}; }
Poly poly_const(fq a) { return a == 0 ? Poly{} : Poly{{a}}; }
Poly poly_T() { return Poly{{0, 1}}; }

Poly poly_from_ints(const Field& F, const std::vector<long long>& coeffs) {
    Poly r;
    r.c.reserve(coeffs.size());
    for (long long v : coeffs) r.c.push_back(F.from_int(v));
    poly_trim(r);
    return r;
}

void poly_trim(Poly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.coeff(i), b.coeff(i));
    poly_trim(r);
    return r;
}

Poly poly_neg(const Field& F, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = F.neg(x);
    return r;
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    return poly_add(F, a, poly_neg(F, b));
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        fq ai = a.c[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            r.c[i + j] = F.add(r.c[i + j], F.mul(ai, b.c[j]));
        }
    }
    return r;
}

Poly poly_mul_scalar(const Field& F, const Poly& a, fq s) {
    if (s == 0) return {};
    Poly r = a;
    for (auto& x : r.c) x = F.mul(x, s);
    return r;
}

Poly poly_shift(const Poly& a, int k) {
    if (a.is_zero() || k == 0) return a;
    if (k < 0) throw std::invalid_argument("negative shift");
    Poly r;
    r.c.assign(a.c.size() + k, 0);
    std::copy(a.c.begin(), a.c.end(), r.c.begin() + k);
    return r;
}

Poly poly_pow(const Field& F, Poly a, long long n) {
    if (n < 0) throw std::invalid_argument("negative polynomial power");
    Poly r = poly_one();
    while (n) {
        if (n & 1) r = poly_mul(F, r, a);
        a = poly_mul(F, a, a);
        n >>= 1;
    }
    return r;
}

fq poly_eval(const Field& F, const Poly& a, fq x) {
    fq r = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

std::pair<Poly, Poly> poly_divrem(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    Poly rem = a;
    Poly quo;
    quo.c.assign(a.degree() - b.degree() + 1, 0);
    fq lead_inv = F.inv(b.lead());
    for (int k = a.degree(); k >= b.degree(); --k) {
        fq c = rem.coeff(k);
        if (c == 0) continue;
        fq qc = F.mul(c, lead_inv);
        int shift = k - b.degree();
        quo.c[shift] = qc;
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            if (b.c[i] == 0) continue;
            rem.c[shift + i] = F.sub(rem.c[shift + i], F.mul(qc, b.c[i]));
        }
    }
    poly_trim(rem);
    poly_trim(quo);
    return {quo, rem};
}

Poly poly_rem(const Field& F, const Poly& a, const Poly& b) {
    return poly_divrem(F, a, b).second;
}

bool poly_divides(const Field& F, const Poly& b, const Poly& a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    return poly_rem(F, a, b).is_zero();
}

Poly poly_divexact(const Field& F, const Poly& a, const Poly& b) {
    auto [q, r] = poly_divrem(F, a, b);
    if (!r.is_zero()) throw std::runtime_error("inexact polynomial division");
    return q;
}

Poly poly_monic(const Field& F, const Poly& a) {
    if (a.is_zero()) throw std::invalid_argument("monic of zero polynomial");
    return poly_mul_scalar(F, a, F.inv(a.lead()));
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return poly_monic(F, a);
}

PolyXgcd poly_xgcd(const Field& F, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly u0 = poly_one(), u1 = poly_zero();
    Poly v0 = poly_zero(), v1 = poly_one();
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(F, r0, r1);
        Poly u2 = poly_sub(F, u0, poly_mul(F, q, u1));
        Poly v2 = poly_sub(F, v0, poly_mul(F, q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    fq s = F.inv(r0.lead());
    return {poly_mul_scalar(F, r0, s), poly_mul_scalar(F, u0, s), poly_mul_scalar(F, v0, s)};
}

Poly poly_invmod(const Field& F, const Poly& a, const Poly& m) {
    PolyXgcd x = poly_xgcd(F, poly_rem(F, a, m), m);
    if (x.g.degree() != 0) throw std::invalid_argument("element not invertible modulo m");
    return poly_rem(F, x.u, m);
}

bool poly_is_monic(const Poly& a) { return !a.is_zero() && a.lead() == 1; }

namespace {

Poly poly_mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m) {
    return poly_rem(F, poly_mul(F, a, b), m);
}

Poly poly_powmod(const Field& F, Poly a, long long n, const Poly& m) {
    Poly r = poly_rem(F, poly_one(), m);
    a = poly_rem(F, a, m);
    while (n) {
        if (n & 1) r = poly_mulmod(F, r, a, m);
        a = poly_mulmod(F, a, a, m);
        n >>= 1;
    }
    return r;
}

}  // namespace

bool poly_is_irreducible(const Field& F, const Poly& f) {
    if (!poly_is_monic(f)) throw std::invalid_argument("irreducibility test requires monic input");
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("irreducibility test requires degree >= 1");
    if (d == 1) return true;
    // h_k = T^{q^k} mod f, computed by iterated q-th powering.
    Poly h = poly_T();
    std::vector<Poly> frob_pow(d + 1);
    frob_pow[0] = poly_rem(F, poly_T(), f);
    for (int k = 1; k <= d; ++k)
        frob_pow[k] = poly_powmod(F, frob_pow[k - 1], F.q(), f);
    if (poly_sub(F, frob_pow[d], poly_T()) != poly_zero() &&
        !poly_rem(F, poly_sub(F, frob_pow[d], poly_T()), f).is_zero())
        return false;
    for (int r = 2; r <= d; ++r) {
        if (d % r != 0) continue;
        bool r_prime = true;
        for (int s = 2; s * s <= r; ++s)
            if (r % s == 0) r_prime = false;
        if (!r_prime) continue;
        Poly diff = poly_sub(F, frob_pow[d / r], poly_T());
        if (poly_gcd(F, f, diff).degree() > 0) return false;
    }
    return true;
}

std::vector<Poly> monic_polys_of_degree(const Field& F, int deg) {
    if (deg < 0) return {};
    std::vector<Poly> out;
    std::vector<fq> digits(deg, 0);
    while (true) {
        Poly a;
        a.c.assign(digits.begin(), digits.end());
        a.c.push_back(1);
        out.push_back(a);
        int i = 0;
        while (i < deg) {
            if (++digits[i] < F.q()) break;
            digits[i] = 0;
            ++i;
        }
        if (i == deg) break;
    }
    return out;
}

std::vector<Poly> monic_irreducibles_of_degree(const Field& F, int deg) {
    std::vector<Poly> out;
    for (const Poly& a : monic_polys_of_degree(F, deg))
        if (poly_is_irreducible(F, a)) out.push_back(a);
    return out;
}

std::string poly_to_string(const Field& F, const Poly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::string s;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        fq c = a.c[i];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        std::string cs = F.to_string(c);
        bool needs_parens = cs.find('+') != std::string::npos;
        if (i == 0) {
            s += needs_parens ? "(" + cs + ")" : cs;
        } else {
            if (c != 1) s += (needs_parens ? "(" + cs + ")" : cs) + "*";
            s += (i == 1) ? var : var + "^" + std::to_string(i);
        }
    }
    return s;
}

namespace {

// Minimal parser for integer-coefficient monomial sums in T.
struct Parser {
    const Field& F;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    long long parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer in polynomial at '" + s.substr(start) + "'");
        return std::stoll(s.substr(start, pos - start));
    }

    Poly parse() {
        Poly acc;
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            neg = s[pos] == '-';
            ++pos;
        }
        while (true) {
            Poly term = parse_term();
            if (neg) term = poly_neg(F, term);
            acc = poly_add(F, acc, term);
            skip_ws();
            if (pos >= s.size()) break;
            if (s[pos] == '+') {
                neg = false;
                ++pos;
            } else if (s[pos] == '-') {
                neg = true;
                ++pos;
            } else {
                throw std::invalid_argument("unexpected character in polynomial: '" + std::string(1, s[pos]) + "'");
            }
        }
        return acc;
    }

    Poly parse_term() {
        skip_ws();
        fq coeff = 1;
        bool saw_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = F.from_int(parse_int());
            saw_coeff = true;
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        int exp = 0;
        if (pos < s.size() && (s[pos] == 'T' || s[pos] == 'X' || s[pos] == 'x' || s[pos] == 'u')) {
            ++pos;
            exp = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                exp = static_cast<int>(parse_int());
            }
        } else if (!saw_coeff) {
            throw std::invalid_argument("expected term in polynomial");
        }
        Poly t = poly_const(coeff);
        return poly_shift(t, exp);
    }
};

}  // namespace

Poly poly_parse(const Field& F, const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '[') {
        // JSON digit-vector form [[d0...],[d1...],...]
        std::vector<std::vector<std::uint32_t>> vecs;
        std::vector<std::uint32_t> cur;
        int depth = 0;
        for (; i < text.size(); ++i) {
            char ch = text[i];
            if (ch == '[') {
                ++depth;
                if (depth == 2) cur.clear();
            } else if (ch == ']') {
                if (depth == 2) vecs.push_back(cur);
                --depth;
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (depth == 2) cur.push_back(static_cast<std::uint32_t>(std::stoul(text.substr(i, j - i))));
                i = j - 1;
            }
        }
        Poly r;
        for (const auto& v : vecs) r.c.push_back(F.from_digits(v));
        poly_trim(r);
        return r;
    }
    Parser p{F, text};
    return p.parse();
}

}  // namespace carlitz
