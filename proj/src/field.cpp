#include "carlitz/field.hpp"

#include <stdexcept>

namespace carlitz {

namespace {

constexpr std::uint32_t kTableLimit = 1024;  // build q*q tables up to this q
constexpr std::uint64_t kMaxQ = 1u << 20;

// Dense polynomial arithmetic over F_p on digit vectors, used only to set up
// the field (modulus search and irreducibility over F_p).
using FpPoly = std::vector<std::uint32_t>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    fp_trim(r);
    return r;
}

std::uint32_t fp_inv_scalar(std::uint32_t a, std::uint32_t p) {
    // Fermat; p is prime and a != 0.
    std::uint32_t r = 1, base = a % p;
    std::uint32_t n = p - 2;
    while (n) {
        if (n & 1) r = static_cast<std::uint64_t>(r) * base % p;
        base = static_cast<std::uint64_t>(base) * base % p;
        n >>= 1;
    }
    return r;
}

FpPoly fp_rem(FpPoly a, const FpPoly& m, std::uint32_t p) {
    fp_trim(a);
    std::uint32_t lead_inv = fp_inv_scalar(m.back(), p);
    while (a.size() >= m.size()) {
        std::uint32_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t sub = static_cast<std::uint64_t>(c) * m[i] % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool fp_irreducible(const FpPoly& f, std::uint32_t p) {
    // x^{p^d} == x mod f, and x^{p^{d/r}} != x for prime r | d.
    std::size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    auto pow_p = [&](std::size_t k) {
        // x^{p^k} mod f by repeated p-th powering
        FpPoly r{0, 1};
        for (std::size_t i = 0; i < k; ++i) {
            FpPoly acc{1};
            FpPoly base = r;
            std::uint32_t n = p;
            while (n) {
                if (n & 1) acc = fp_rem(fp_mul(acc, base, p), f, p);
                base = fp_rem(fp_mul(base, base, p), f, p);
                n >>= 1;
            }
            r = acc;
        }
        return r;
    };
    FpPoly x = fp_rem({0, 1}, f, p);
    if (pow_p(d) != x) return false;
    for (std::size_t r = 2; r <= d; ++r) {
        if (d % r != 0) continue;
        bool r_prime = true;
        for (std::size_t s = 2; s * s <= r; ++s)
            if (r % s == 0) r_prime = false;
        if (!r_prime) continue;
        FpPoly h = pow_p(d / r);
        // gcd(x^{p^{d/r}} - x, f) must be trivial
        FpPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(diff);
        FpPoly g = fp_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> default_fp_modulus(std::uint32_t p, std::uint32_t e) {
    if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (e == 1) return {0, 1};  // t itself; F_p needs no extension data
    // Enumerate coefficient sequences (c_0, ..., c_{e-1}) in lexicographic
    // order, c_0 most significant.
    std::vector<std::uint32_t> c(e, 0);
    while (true) {
        FpPoly f(c.begin(), c.end());
        f.push_back(1);  // monic
        if (fp_irreducible(f, p)) return f;
        std::size_t i = e;
        while (i > 0) {
            --i;
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0) throw std::logic_error("no irreducible of requested degree");
        }
    }
}

void Field::init(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
    if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxQ) throw std::invalid_argument("field size exceeds supported limit");
    }
    if (modulus.size() != e + 1 || modulus.back() != 1)
        throw std::invalid_argument("field modulus must be monic of degree e");
    for (auto d : modulus)
        if (d >= p) throw std::invalid_argument("field modulus digit out of range");
    if (!fp_irreducible(modulus, p))
        throw std::invalid_argument("field modulus is reducible over F_p");
    p_ = p;
    e_ = e;
    q_ = static_cast<std::uint32_t>(q);
    modulus_ = std::move(modulus);

    add_digit_.assign(static_cast<std::size_t>(p_) * p_, 0);
    for (std::uint32_t a = 0; a < p_; ++a)
        for (std::uint32_t b = 0; b < p_; ++b)
            add_digit_[a * p_ + b] = (a + b) % p_;

    tables_ = q_ <= kTableLimit;
    if (tables_) {
        mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
        for (fq a = 0; a < q_; ++a)
            for (fq b = a; b < q_; ++b) {
                fq v = mul_nocache(a, b);
                mul_table_[static_cast<std::size_t>(a) * q_ + b] = v;
                mul_table_[static_cast<std::size_t>(b) * q_ + a] = v;
            }
        inv_table_.assign(q_, 0);
        for (fq a = 1; a < q_; ++a) {
            if (inv_table_[a]) continue;
            for (fq b = 1; b < q_; ++b)
                if (mul_table_[static_cast<std::size_t>(a) * q_ + b] == 1) {
                    inv_table_[a] = b;
                    inv_table_[b] = a;
                    break;
                }
        }
    }
}

Field::Field(std::uint32_t p, std::uint32_t e) { init(p, e, default_fp_modulus(p, e)); }

Field::Field(std::uint32_t p, std::uint32_t e, const std::vector<std::uint32_t>& modulus) {
    init(p, e, modulus);
}

fq Field::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<fq>(r);
}

fq Field::from_digits(const std::vector<std::uint32_t>& digits) const {
    if (digits.size() > e_) throw std::invalid_argument("too many digits for field element");
    fq v = 0;
    for (std::size_t i = digits.size(); i > 0; --i) {
        if (digits[i - 1] >= p_) throw std::invalid_argument("digit out of range");
        v = v * p_ + digits[i - 1];
    }
    return v;
}

std::vector<std::uint32_t> Field::digits(fq a) const {
    std::vector<std::uint32_t> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

fq Field::add(fq a, fq b) const {
    fq r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += add_digit_[(a % p_) * p_ + (b % p_)] * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

fq Field::neg(fq a) const {
    fq r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

fq Field::sub(fq a, fq b) const { return add(a, neg(b)); }

fq Field::mul_nocache(fq a, fq b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return static_cast<std::uint64_t>(a) * b % p_;
    std::vector<std::uint32_t> da = digits(a), db = digits(b);
    std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
    // reduce modulo the monic modulus
    for (std::size_t k = prod.size(); k-- > e_;) {
        std::uint32_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::uint32_t i = 0; i < e_; ++i) {
            std::uint64_t sub = static_cast<std::uint64_t>(c) * modulus_[i] % p_;
            prod[k - e_ + i] = (prod[k - e_ + i] + p_ - sub) % p_;
        }
    }
    fq v = 0;
    for (std::size_t i = e_; i-- > 0;) v = v * p_ + prod[i];
    return v;
}

fq Field::mul(fq a, fq b) const {
    if (tables_) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
    return mul_nocache(a, b);
}

fq Field::inv(fq a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero field element");
    if (tables_) return inv_table_[a];
    return pow(a, static_cast<long long>(q_) - 2);
}

fq Field::pow(fq a, long long n) const {
    if (n < 0) {
        a = inv(a);
        n = -n;
    }
    fq r = 1;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

std::string Field::to_string(fq a) const {
    if (e_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::vector<std::uint32_t> d = digits(a);
    std::string s;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(d[i]);
        } else {
            if (d[i] != 1) s += std::to_string(d[i]) + "*";
            s += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace carlitz
