#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "quintic/splitting.hpp"
#include "quintic/symbols.hpp"

using namespace quintic;

TEST_CASE("splitting examples") {
    CHECK(splitting_type(2) == SplittingType{1, 4, 1});
    CHECK(splitting_type(19) == SplittingType{1, 2, 2});
    CHECK(splitting_type(5) == SplittingType{4, 1, 1});
    CHECK(splitting_type(11) == SplittingType{1, 1, 4});
    CHECK(splitting_type(3) == SplittingType{1, 4, 1});
    CHECK_THROWS_AS(splitting_type(15), std::invalid_argument);
}

TEST_CASE("five is a unit times (1 - zeta)^4") {
    CycInt l4 = pow(lambda(), 4);
    CHECK(norm(l4) == norm(CycInt(5)));
    auto u = div_exact(CycInt(5), l4);
    REQUIRE(u.has_value());
    CHECK(is_unit(*u));
}

TEST_CASE("splitting matches trial factorization of Phi_5") {
    for (long p = 2; p < 200; ++p) {
        if (p == 5 || !oracle::small_is_prime(p)) continue;
        auto [f, r] = oracle::phi5_factor_pattern(p);
        CAPTURE(p);
        SplittingType t = splitting_type(p);
        CHECK(t.e == 1);
        CHECK(t.f == f);
        CHECK(t.r == r);
    }
}

TEST_CASE("factor 19") {
    auto f = factor_f2_prime(19);
    CHECK(f.representation == QuadraticInt{4, 3});
    CHECK(f.first.generator == CycInt(4, 0, -3, -3));
    CHECK(f.second.generator == conjugate(f.first.generator, 2));
    CHECK(norm(f.first.generator) == 361);
    CHECK(norm(f.second.generator) == 361);
    CHECK(is_unit(f.unit_quotient));
    CHECK(f.first.generator * f.second.generator * f.unit_quotient == CycInt(19));
}

TEST_CASE("factor 29 covers the (5, 1) representation") {
    // 25 + 5 - 1 = 29: embed(5 + phi) generates one of the two primes above 29.
    auto f = factor_f2_prime(29);
    CHECK(quadratic_norm(f.representation) == 29);
    CycInt g = embed_quadratic({5, 1});
    CHECK(norm(g) == 841);
    bool first = divides(f.first.generator, g) && divides(g, f.first.generator);
    bool second = divides(f.second.generator, g) && divides(g, f.second.generator);
    CHECK(first != second);
}

TEST_CASE("factor_f2_prime for all q < 500") {
    int count = 0;
    for (long q = 2; q < 500; ++q) {
        if (q % 5 != 4 || !oracle::small_is_prime(q)) continue;
        CAPTURE(q);
        auto f = factor_f2_prime(q);
        ++count;
        CHECK(quadratic_norm(f.representation) == q);
        CHECK(f.representation.a > 0);
        CHECK(f.representation.b > 0);
        CHECK(abs(norm(f.first.generator)) == q * q);
        CHECK(abs(norm(f.second.generator)) == q * q);
        CHECK(is_unit(f.unit_quotient));
        CHECK(f.first.generator * f.second.generator * f.unit_quotient == CycInt(q));
        // the two primes are distinct
        CHECK_FALSE(divides(f.first.generator, f.second.generator));
    }
    CHECK(count == 23);
}

TEST_CASE("factor errors") {
    CHECK_THROWS_AS(factor_f2_prime(7), std::invalid_argument);
    CHECK_THROWS_AS(factor_f2_prime(11), std::invalid_argument);
    CHECK_THROWS_AS(factor_f2_prime(49), std::invalid_argument);
}

TEST_CASE("kummer fields") {
    CHECK_THROWS_AS(make_kummer_field(CycInt(0), "0"), std::invalid_argument);
    CHECK_THROWS_AS(make_kummer_field(CycInt(32), "32"), std::invalid_argument);
    CHECK_THROWS_AS(make_kummer_field(CycInt(-243), "-243"), std::invalid_argument);
    CHECK_NOTHROW(make_kummer_field(CycInt(24), "8p"));
}

TEST_CASE("kummer splitting") {
    PrimeIdealRep two = build_residue_field(CycInt(2));
    for (long p : {3L, 23L, 43L}) {
        auto K = make_kummer_field(CycInt(p), "p");
        CHECK(kummer_splitting(K, two).kind == KummerCase::SplitsInto5);
    }
    auto f = factor_f2_prime(19);
    auto K = make_kummer_field(CycInt(19) * CycInt(2), "38");
    CHECK(kummer_splitting(K, f.first).kind == KummerCase::Ramified5thPower);

    // A nontrivial symbol gives an inert prime.
    PrimeIdealRep three = build_residue_field(CycInt(3));
    auto Kz = make_kummer_field(CycInt(1, 1, 0, 0), "1+z");
    auto s = quintic_symbol(CycInt(1, 1, 0, 0), three);
    CHECK((kummer_splitting(Kz, three).kind == KummerCase::Inert) == (!s.is_zero() && !s.is_one()));

    // Rational radicands split above q = 4 mod 5 (see the symbol tests).
    auto K3 = make_kummer_field(CycInt(3), "3");
    CHECK(kummer_splitting(K3, f.first).kind == KummerCase::SplitsInto5);
}

TEST_CASE("radicand 8p behaves like p when {2/pi} = 1") {
    for (long q : {19L, 29L, 59L}) {
        auto f = factor_f2_prime(q);
        for (long p : {3L, 23L, 43L}) {
            for (const auto* P : {&f.first, &f.second}) {
                REQUIRE(quintic_symbol(CycInt(2), *P).is_one());
                auto a = kummer_splitting(make_kummer_field(CycInt(8 * p), "8p"), *P);
                auto b = kummer_splitting(make_kummer_field(CycInt(p), "p"), *P);
                CHECK(a.kind == b.kind);
                CHECK(a.symbol == b.symbol);
            }
        }
    }
}
