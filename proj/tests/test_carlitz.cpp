#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "carlitz/carlitz_module.hpp"
#include "carlitz/rational.hpp"

using namespace carlitz;

TEST_CASE("rho_T and scalars") {
    Field F(3, 1);
    AdditivePoly rho_t = carlitz_action(F, poly_T());
    REQUIRE(rho_t.beta.size() == 2);
    CHECK(rho_t.beta[0] == poly_T());
    CHECK(rho_t.beta[1] == poly_one());
    AdditivePoly rho_c = carlitz_action(F, poly_const(2));
    REQUIRE(rho_c.beta.size() == 1);
    CHECK(rho_c.beta[0] == poly_const(2));
    CHECK(carlitz_action(F, Poly{}).is_zero());
}

TEST_CASE("rho_{T^2} = T^2 x + (T^q + T) x^q + x^{q^2}") {
    Field F(3, 1);
    AdditivePoly r = carlitz_action(F, poly_parse(F, "T^2"));
    REQUIRE(r.beta.size() == 3);
    CHECK(r.beta[0] == poly_parse(F, "T^2"));
    CHECK(r.beta[1] == poly_parse(F, "T^3+T"));
    CHECK(r.beta[2] == poly_one());
}

TEST_CASE("carlitz_action is a ring homomorphism") {
    for (int q : {2, 3}) {
        Field F(q, 1);
        std::mt19937_64 rng(17);
        auto rnd = [&](int maxdeg) {
            Poly r;
            int d = static_cast<int>(rng() % (maxdeg + 1));
            for (int i = 0; i <= d; ++i) r.c.push_back(static_cast<fq>(rng() % F.q()));
            poly_trim(r);
            return r;
        };
        for (int t = 0; t < 60; ++t) {
            Poly a = rnd(4), b = rnd(4);
            AdditivePoly ra = carlitz_action(F, a), rb = carlitz_action(F, b);
            CHECK(additive_equal(carlitz_action(F, poly_add(F, a, b)), additive_add(F, ra, rb)));
            CHECK(additive_equal(carlitz_action(F, poly_mul(F, a, b)), additive_compose(F, ra, rb)));
            // degree and leading coefficient
            if (!a.is_zero()) {
                CHECK(ra.frobenius_degree() == a.degree());
                CHECK(ra.beta.back() == poly_const(a.lead()));
            }
        }
    }
}

TEST_CASE("inverse cyclotomic: frozen examples") {
    {
        Field F(3, 1);
        PolyInX f = inverse_cyclotomic_of(F, poly_T());  // 1 + T X^2
        REQUIRE(f.size() == 3);
        CHECK(f[0] == poly_one());
        CHECK(f[1].is_zero());
        CHECK(f[2] == poly_T());
    }
    {
        Field F(2, 1);
        PolyInX f = inverse_cyclotomic_of(F, poly_T());  // 1 + T X
        REQUIRE(f.size() == 2);
        CHECK(f[0] == poly_one());
        CHECK(f[1] == poly_T());
    }
}

TEST_CASE("inverse cyclotomic has constant term 1 and is 1 mod pi") {
    for (int q : {2, 3}) {
        Field F(q, 1);
        for (int d = 1; d <= 2; ++d)
            for (const Poly& pi : monic_irreducibles_of_degree(F, d)) {
                PrimeModulus pm(F, pi);
                const PolyInX& f = pm.inverse_cyclotomic();
                CHECK(f[0] == poly_one());
                for (std::size_t i = 1; i < f.size(); ++i)
                    if (!f[i].is_zero()) CHECK(poly_divides(F, pi, f[i]));
            }
    }
}

TEST_CASE("hayes: frozen small cases") {
    Field F(3, 1);
    PrimeModulus pmT(F, poly_T());
    CHECK(hayes_eisenstein_check(pmT, 1));
    CHECK(hayes_eisenstein_check(pmT, 2));
    PrimeModulus pm2(F, poly_parse(F, "T^2+1"));
    CHECK(hayes_eisenstein_check(pm2, 1));
}

TEST_CASE("hayes and frobenius exhaustively for small degrees") {
    for (int q : {2, 3}) {
        Field F(q, 1);
        for (int d = 1; d <= 2; ++d)
            for (const Poly& pi : monic_irreducibles_of_degree(F, d)) {
                PrimeModulus pm(F, pi);
                for (int n = 1; n <= 2; ++n) CHECK(hayes_eisenstein_check(pm, n));
                CHECK(frobenius_congruence_check(pm));
            }
    }
}

TEST_CASE("feasibility limit is enforced") {
    Field F(3, 1);
    PrimeModulus pm(F, poly_parse(F, "T^3+2*T+1"));
    Limits tight;
    tight.max_carlitz_degree = 100;
    CHECK_THROWS_AS(hayes_eisenstein_check(pm, 2, tight), std::invalid_argument);
}

TEST_CASE("prime modulus rejects bad input") {
    Field F(3, 1);
    CHECK_THROWS_AS(PrimeModulus(F, poly_parse(F, "T^2+2")), std::invalid_argument);
    CHECK_THROWS_AS(PrimeModulus(F, poly_parse(F, "2*T")), std::invalid_argument);
}

TEST_CASE("rendering") {
    Field F(3, 1);
    CHECK(additive_to_string(F, carlitz_action(F, poly_T())) == "T*x + x^3");
}
