#include "carlitz/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace carlitz {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::n() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::string Partition::str() const {
    if (parts.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += "+";
        s += std::to_string(parts[i]);
    }
    return s;
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, const Limits& lim) {
    if (n < 0) throw std::invalid_argument("partitions of a negative integer");
    if (n > lim.max_partition_n)
        throw std::invalid_argument("partition size exceeds the configured limit");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    if (n == 0) out = {Partition{}};
    return out;
}

Partition conjugate(const Partition& mu) {
    if (mu.parts.empty()) return mu;
    std::vector<int> t(mu.parts[0], 0);
    for (int p : mu.parts)
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
}

bool dominates(const Partition& mu, const Partition& nu) {
    if (mu.n() != nu.n()) return false;
    int a = 0, b = 0;
    std::size_t len = std::max(mu.parts.size(), nu.parts.size());
    for (std::size_t i = 0; i < len; ++i) {
        a += i < mu.parts.size() ? mu.parts[i] : 0;
        b += i < nu.parts.size() ? nu.parts[i] : 0;
        if (a < b) return false;
    }
    return true;
}

namespace {

// DP over the rows of lambda; state = multiset of remaining column demands,
// kept as a sorted (descending) vector.
struct MatrixCounter {
    std::map<std::pair<int, std::vector<int>>, BigInt> memo;

    BigInt count(int row, const std::vector<int>& state, const Partition& lambda) {
        if (row == lambda.num_parts()) {
            for (int v : state)
                if (v != 0) return 0;
            return 1;
        }
        auto key = std::make_pair(row, state);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        // group equal demands; choose how many columns of each group get a 1
        std::vector<std::pair<int, int>> groups;  // (value, count), values > 0
        int zeros = 0;
        for (int v : state) {
            if (v == 0) {
                ++zeros;
                continue;
            }
            if (!groups.empty() && groups.back().first == v)
                ++groups.back().second;
            else
                groups.emplace_back(v, 1);
        }
        (void)zeros;
        int need = lambda.parts[row];
        BigInt total = 0;
        std::vector<int> take(groups.size(), 0);
        // enumerate take[] with sum = need, take[i] <= groups[i].count
        std::function<void(std::size_t, int)> rec = [&](std::size_t gi, int left) {
            if (gi == groups.size()) {
                if (left != 0) return;
                BigInt ways = 1;
                std::vector<int> next;
                next.reserve(state.size());
                for (std::size_t i = 0; i < groups.size(); ++i) {
                    // binomial(count, take)
                    BigInt b = 1;
                    for (int t = 0; t < take[i]; ++t) {
                        b *= groups[i].second - t;
                        b /= t + 1;
                    }
                    ways *= b;
                    for (int t = 0; t < take[i]; ++t) next.push_back(groups[i].first - 1);
                    for (int t = take[i]; t < groups[i].second; ++t) next.push_back(groups[i].first);
                }
                std::sort(next.begin(), next.end(), std::greater<int>());
                while (!next.empty() && next.back() == 0) next.pop_back();
                total += ways * count(row + 1, next, lambda);
                return;
            }
            int cap = std::min(groups[gi].second, left);
            for (int t = 0; t <= cap; ++t) {
                take[gi] = t;
                rec(gi + 1, left - t);
            }
        };
        rec(0, need);
        memo[key] = total;
        return total;
    }
};

}  // namespace

BigInt count_01_matrices(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) return 0;
    std::vector<int> state = mu.parts;
    MatrixCounter mc;
    return mc.count(0, state, lambda);
}

TransitionRow expand_e_in_m(const Partition& lambda, const Limits& lim) {
    int n = lambda.n();
    TransitionRow row;
    row.source = lambda;
    row.target = SymBasis::monomial;
    for (const Partition& mu : partitions_of(n, lim)) {
        BigInt c = count_01_matrices(lambda, mu);
        if (c != 0) row.coeffs[mu] = c;
    }
    return row;
}

TransitionRow expand_m_in_e(const Partition& mu, const Limits& lim) {
    int n = mu.n();
    std::vector<Partition> parts = partitions_of(n, lim);
    // ascending lex extends the dominance order from below
    std::sort(parts.begin(), parts.end());
    std::map<Partition, std::map<Partition, BigInt>> rows;  // m_nu in the e basis
    for (const Partition& nu : parts) {
        // e_{nu'} = m_nu + sum_{kappa < nu} M_{nu' kappa} m_kappa
        Partition nuc = conjugate(nu);
        std::map<Partition, BigInt> acc;
        acc[nuc] = 1;  // e_{nu'} itself
        for (const Partition& kappa : parts) {
            if (kappa == nu) continue;
            BigInt c = count_01_matrices(nuc, kappa);
            if (c == 0) continue;
            // subtract c * (expansion of m_kappa); kappa is strictly dominated
            // by nu, hence already solved
            auto it = rows.find(kappa);
            if (it == rows.end()) throw std::logic_error("dominance order violated in back-substitution");
            for (const auto& [key, val] : it->second) {
                acc[key] -= c * val;
                if (acc[key] == 0) acc.erase(key);
            }
        }
        rows[nu] = std::move(acc);
        if (nu == mu) break;
    }
    TransitionRow row;
    row.source = mu;
    row.target = SymBasis::elementary;
    row.coeffs = rows.at(mu);
    return row;
}

CongLemmaReport conglemma_check(int p, int r, int m, const Limits& lim) {
    if (p < 2 || r < 1 || m < 1) throw std::invalid_argument("conglemma needs p >= 2, r >= 1, m >= 1");
    CongLemmaReport rep;
    rep.p = p;
    rep.r = r;
    rep.m = m;
    long long pr = 1;
    for (int i = 0; i < r; ++i) pr *= p;
    long long n = static_cast<long long>(m) * pr;
    if (n > lim.max_partition_n)
        throw std::invalid_argument("m * p^r exceeds the configured partition limit");
    Partition xi(std::vector<int>(m, static_cast<int>(pr)));
    Partition excluded(std::vector<int>(static_cast<std::size_t>(pr), m));
    rep.pass = true;
    for (const Partition& mu : partitions_of(static_cast<int>(n), lim)) {
        if (mu == excluded) continue;
        TransitionRow row = expand_m_in_e(mu, lim);
        auto it = row.coeffs.find(xi);
        BigInt c = it != row.coeffs.end() ? it->second : BigInt(0);
        rep.coefficients.emplace_back(mu, c);
        if (c % p != 0) {
            rep.pass = false;
            rep.violations.push_back(mu);
        }
    }
    return rep;
}

Series<KRing> evaluate_symmetric(const TransitionRow& row, const RootSymmetrics& rs, int prec) {
    if (row.target != SymBasis::elementary)
        throw std::invalid_argument("evaluate_symmetric expects an e-basis row");
    const PrimeModulus& pm = *rs.pm;
    const Field& F = pm.field();
    KRing ring(F, CoeffTag::integral);
    long long qd = pm.qd();
    Series<KRing> acc = series_zero(ring, prec);
    for (const auto& [nu, coeff] : row.coeffs) {
        BigInt cm = coeff % F.p();
        if (cm < 0) cm += F.p();
        fq scalar = F.from_int(static_cast<long long>(cm));
        if (scalar == 0) continue;
        bool vanishes = false;
        for (int part : nu.parts)
            if (part > qd) vanishes = true;  // e_r = 0 for r > q^d
        if (vanishes) continue;
        Series<KRing> term = series_one(ring, prec);
        for (int part : nu.parts)
            term = series_mul_raw(term, series_truncate(rs.e[part - 1], prec), prec, false);
        acc = series_add(acc, series_scale_fq(term, scalar));
    }
    return acc;
}

}  // namespace carlitz
