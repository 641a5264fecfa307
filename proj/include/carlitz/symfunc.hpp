#ifndef CARLITZ_SYMFUNC_HPP
#define CARLITZ_SYMFUNC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "carlitz/limits.hpp"
#include "carlitz/operators.hpp"

namespace carlitz {

using BigInt = boost::multiprecision::cpp_int;

// Integer partition, weakly decreasing parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int n() const;
    int num_parts() const { return static_cast<int>(parts.size()); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }  // lex on parts

    std::string str() const;  // "3+1+1", "0" for the empty partition
};

// All partitions of n in descending lexicographic order: (n), (n-1,1), ...,
// (1^n).
std::vector<Partition> partitions_of(int n, const Limits& lim = Limits{});

Partition conjugate(const Partition& mu);

// mu dominates nu (both partitions of the same n).
bool dominates(const Partition& mu, const Partition& nu);

// Number of 0-1 matrices with row sums lambda and column sums mu.
BigInt count_01_matrices(const Partition& lambda, const Partition& mu);

enum class SymBasis { monomial, elementary };

// One row of a basis transition: source expressed in the other basis.
struct TransitionRow {
    Partition source;
    SymBasis target = SymBasis::monomial;  // basis of the keys below
    std::map<Partition, BigInt> coeffs;
};

// e_lambda = sum_mu M_{lambda mu} m_mu.
TransitionRow expand_e_in_m(const Partition& lambda, const Limits& lim = Limits{});
// m_mu = sum_nu a_{mu nu} e_nu, by unitriangular back-substitution.
TransitionRow expand_m_in_e(const Partition& mu, const Limits& lim = Limits{});

// Lemma check: for n = m p^r and xi = (p^r, ..., p^r) (m parts), every
// partition mu of n other than (m^{p^r}) has p | a_{mu xi}.
struct CongLemmaReport {
    int p = 0, r = 0, m = 0;
    bool pass = false;
    std::vector<std::pair<Partition, BigInt>> coefficients;  // (mu, a_{mu xi})
    std::vector<Partition> violations;
};

CongLemmaReport conglemma_check(int p, int r, int m, const Limits& lim = Limits{});

// Specialize an e-basis row at the root symmetric values: parts above q^d
// contribute zero, integer coefficients map through F_p.
Series<KRing> evaluate_symmetric(const TransitionRow& row, const RootSymmetrics& rs, int prec);

}  // namespace carlitz

#endif
