#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "carlitz/poly.hpp"

using namespace carlitz;

namespace {

Poly rnd_poly(const Field& F, std::mt19937_64& rng, int maxdeg) {
    Poly r;
    int d = static_cast<int>(rng() % (maxdeg + 1));
    for (int i = 0; i <= d; ++i) r.c.push_back(static_cast<fq>(rng() % F.q()));
    poly_trim(r);
    return r;
}

// factor-search oracle: smallest monic divisor of degree in [1, deg/2]
bool has_proper_factor(const Field& F, const Poly& f) {
    for (int d = 1; 2 * d <= f.degree(); ++d)
        for (const Poly& g : monic_polys_of_degree(F, d))
            if (poly_rem(F, f, g).is_zero()) return true;
    return false;
}

}  // namespace

TEST_CASE("divrem invariant a = q b + r on random inputs") {
    Field F(3, 1);
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 300; ++t) {
        Poly a = rnd_poly(F, rng, 8);
        Poly b = rnd_poly(F, rng, 4);
        if (b.is_zero()) continue;
        auto [q, r] = poly_divrem(F, a, b);
        CHECK(poly_add(F, poly_mul(F, q, b), r) == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd divides both arguments and is monic") {
    Field F(2, 2);
    std::mt19937_64 rng(99);
    for (int t = 0; t < 200; ++t) {
        Poly a = rnd_poly(F, rng, 6), b = rnd_poly(F, rng, 6);
        Poly g = poly_gcd(F, a, b);
        if (g.is_zero()) {
            CHECK(a.is_zero());
            CHECK(b.is_zero());
            continue;
        }
        CHECK(g.lead() == 1);
        CHECK(poly_rem(F, a, g).is_zero());
        CHECK(poly_rem(F, b, g).is_zero());
        PolyXgcd x = poly_xgcd(F, a, b);
        CHECK(x.g == g);
        CHECK(poly_add(F, poly_mul(F, x.u, a), poly_mul(F, x.v, b)) == g);
    }
}

TEST_CASE("irreducibility: frozen cases") {
    Field F(3, 1);
    CHECK(poly_is_irreducible(F, poly_parse(F, "T")));
    CHECK(poly_is_irreducible(F, poly_parse(F, "T^2+1")));
    // T^2 + 2 = (T+1)(T+2) over F_3
    CHECK_FALSE(poly_is_irreducible(F, poly_parse(F, "T^2+2")));
    CHECK_THROWS_AS(poly_is_irreducible(F, poly_parse(F, "2*T")), std::invalid_argument);
}

TEST_CASE("irreducibility agrees with the factor-search oracle") {
    for (int q : {2, 3}) {
        Field F(q, 1);
        for (int d = 1; d <= 4; ++d)
            for (const Poly& f : monic_polys_of_degree(F, d))
                CHECK(poly_is_irreducible(F, f) == !has_proper_factor(F, f));
    }
}

TEST_CASE("monic enumeration counts") {
    Field F(3, 1);
    CHECK(monic_polys_of_degree(F, 2).size() == 9);
    CHECK(monic_irreducibles_of_degree(F, 1).size() == 3);
    CHECK(monic_irreducibles_of_degree(F, 2).size() == 3);
    CHECK(monic_irreducibles_of_degree(F, 3).size() == 8);
    Field F4(2, 2);
    CHECK(monic_irreducibles_of_degree(F4, 2).size() == 6);
    CHECK(monic_irreducibles_of_degree(F4, 3).size() == 20);
}

TEST_CASE("parse and format round-trip") {
    Field F(3, 1);
    Poly a = poly_parse(F, "T^3+2*T+1");
    CHECK(poly_to_string(F, a) == "T^3+2*T+1");
    CHECK(poly_parse(F, poly_to_string(F, a)) == a);
    CHECK(poly_parse(F, "[[1],[0],[1]]") == poly_parse(F, "T^2+1"));
    CHECK(poly_parse(F, "0").is_zero());
    CHECK(poly_parse(F, "T - 1") == poly_parse(F, "T+2"));
}

TEST_CASE("invmod inverts units") {
    Field F(3, 1);
    Poly m = poly_parse(F, "T^2+1");
    Poly a = poly_parse(F, "T+2");
    Poly inv = poly_invmod(F, a, m);
    CHECK(poly_rem(F, poly_mul(F, a, inv), m) == poly_one());
}
