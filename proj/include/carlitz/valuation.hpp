#ifndef CARLITZ_VALUATION_HPP
#define CARLITZ_VALUATION_HPP

#include <compare>
#include <string>

namespace carlitz {

// Half-integer valuation with +infinity.  Stored as twice the value so that
// pi^{k/2} bookkeeping stays exact.
struct Val {
    long long half = 0;  // value = half / 2
    bool inf = false;

    static Val infinity() { return Val{0, true}; }
    static Val of(long long n) { return Val{2 * n, false}; }
    static Val of_half(long long h) { return Val{h, false}; }

    bool is_int() const { return inf || half % 2 == 0; }

    friend Val operator+(Val a, Val b) {
        if (a.inf || b.inf) return infinity();
        return Val{a.half + b.half, false};
    }
    friend Val min(Val a, Val b) {
        if (a.inf) return b;
        if (b.inf) return a;
        return a.half <= b.half ? a : b;
    }
    friend bool operator==(Val a, Val b) {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.half == b.half;
    }
    friend bool operator<(Val a, Val b) {
        if (a.inf) return false;
        if (b.inf) return true;
        return a.half < b.half;
    }
    friend bool operator<=(Val a, Val b) { return a < b || a == b; }
    friend bool operator>=(Val a, Val b) { return b <= a; }
    friend bool operator>(Val a, Val b) { return b < a; }

    std::string str() const {
        if (inf) return "+inf";
        if (half % 2 == 0) return std::to_string(half / 2);
        return std::to_string(half) + "/2";
    }
};

// A valuation that may only be known as a lower bound (truncated residue data).
struct ValBound {
    Val v;
    bool exact = true;

    std::string str() const { return exact ? v.str() : ">=" + v.str(); }
};

}  // namespace carlitz

#endif
