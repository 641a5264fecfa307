#ifndef CARLITZ_FIELD_HPP
#define CARLITZ_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace carlitz {

// Element of F_q, encoded as sum(digit[i] * p^i) with digits the coordinates
// in the basis 1, t, ..., t^{e-1} over F_p.  All arithmetic goes through the
// owning Field.
using fq = std::uint32_t;

// F_q = F_p[t]/(modulus), q = p^e.  The modulus is monic of degree e over F_p
// and defaults to the lexicographically smallest monic irreducible, comparing
// coefficient sequences low-degree-first.  Immutable after construction;
// multiplication and inverse tables are built eagerly for small q.
class Field {
public:
    // Default modulus for (p, e).
    Field(std::uint32_t p, std::uint32_t e);
    // Explicit modulus: e+1 digits low-to-high, monic, irreducible over F_p.
    Field(std::uint32_t p, std::uint32_t e, const std::vector<std::uint32_t>& modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    fq zero() const { return 0; }
    fq one() const { return 1; }
    fq from_int(long long n) const;          // image of n under Z -> F_p -> F_q
    fq from_digits(const std::vector<std::uint32_t>& digits) const;
    std::vector<std::uint32_t> digits(fq a) const;

    fq add(fq a, fq b) const;
    fq sub(fq a, fq b) const;
    fq neg(fq a) const;
    fq mul(fq a, fq b) const;
    fq inv(fq a) const;                      // a != 0
    fq div(fq a, fq b) const { return mul(a, inv(b)); }
    fq pow(fq a, long long n) const;         // n < 0 allowed for a != 0
    fq frobenius(fq a) const { return pow(a, p_); }

    std::string to_string(fq a) const;       // "2", "t", "2*t+1", ...

    bool operator==(const Field& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }
    bool operator!=(const Field& other) const { return !(*this == other); }

private:
    std::uint32_t p_, e_, q_;
    std::vector<std::uint32_t> modulus_;     // e+1 digits over F_p, monic
    std::vector<fq> mul_table_;              // q*q entries when tables in use
    std::vector<fq> inv_table_;
    std::vector<std::uint32_t> add_digit_;   // p*p add table over F_p
    bool tables_;

    void init(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);
    fq mul_nocache(fq a, fq b) const;
};

// Lexicographically smallest monic irreducible of degree e over F_p,
// returned as e+1 digits low-to-high.
std::vector<std::uint32_t> default_fp_modulus(std::uint32_t p, std::uint32_t e);

bool is_prime_u32(std::uint32_t n);

}  // namespace carlitz

#endif
