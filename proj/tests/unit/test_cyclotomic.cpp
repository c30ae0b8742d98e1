#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "quintic/cyclotomic.hpp"

using namespace quintic;

namespace {

CycInt z(long k) { return CycInt::zeta(k); }

std::array<long, 4> small_coeffs(const CycInt& x) {
    return {to_long(x[0]), to_long(x[1]), to_long(x[2]), to_long(x[3])};
}

}  // namespace

TEST_CASE("mul examples") {
    CycInt a(3, -1, 4, 7);
    CHECK(mul(a, CycInt(1)) == a);
    CHECK(mul(z(1), z(3)) == CycInt(-1, -1, -1, -1));
    CHECK(mul(CycInt(1) + z(1), CycInt(1) + z(2)) == CycInt(1, 1, 1, 1));
    CHECK(z(5) == CycInt(1));
    CHECK(z(-1) == z(4));
}

TEST_CASE("mul agrees with long division by Phi_5") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        CycInt x = oracle::random_cycint(rng, -1000000, 1000000);
        CycInt y = oracle::random_cycint(rng, -1000000, 1000000);
        auto ref = oracle::poly_mul_mod_phi5(x.coeffs(), y.coeffs());
        CHECK(mul(x, y).coeffs() == ref);
    }
}

TEST_CASE("conjugate") {
    CHECK(conjugate(z(1), 2) == z(2));
    CycInt x(5, -2, 0, 9);
    CHECK(conjugate(x, 1) == x);
    CHECK(conjugate(CycInt(1) + z(1), 4) == CycInt(0, -1, -1, -1));
    CHECK_THROWS_AS(conjugate(x, 0), std::invalid_argument);
    CHECK_THROWS_AS(conjugate(x, 5), std::invalid_argument);

    std::mt19937_64 rng(12);
    for (int i = 0; i < 50; ++i) {
        CycInt r = oracle::random_cycint(rng, -1000, 1000);
        for (int k = 1; k <= 4; ++k) {
            for (int m = 1; m <= 4; ++m) CHECK(conjugate(conjugate(r, k), m) == conjugate(r, k * m % 5));
            CHECK(norm(conjugate(r, k)) == norm(r));
        }
        // a ring automorphism
        CycInt s = oracle::random_cycint(rng, -1000, 1000);
        CHECK(conjugate(r * s, 3) == conjugate(r, 3) * conjugate(s, 3));
    }
}

TEST_CASE("norm examples") {
    CHECK(norm(CycInt(2)) == 16);
    CHECK(norm(z(1)) == 1);
    CHECK(norm(lambda()) == 5);
    CHECK(norm(CycInt(0)) == 0);
    CHECK(norm(CycInt(-3)) == 81);
}

TEST_CASE("norm matches the complex embeddings") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        CycInt x = oracle::random_cycint(rng, -100, 100);
        CHECK(norm(x) == Int(oracle::complex_norm(small_coeffs(x))));
    }
}

TEST_CASE("norm is multiplicative and vanishes only at zero") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 1000; ++i) {
        CycInt x = oracle::random_cycint(rng, -1000000, 1000000);
        CycInt y = oracle::random_cycint(rng, -1000000, 1000000);
        CHECK(norm(x * y) == norm(x) * norm(y));
        CHECK((norm(x) == 0) == x.is_zero());
        CHECK(norm(x) >= 0);
    }
}

TEST_CASE("div_exact") {
    CycInt cof = (CycInt(1) - z(2)) * (CycInt(1) - z(3)) * (CycInt(1) - z(4));
    auto d = div_exact(CycInt(5), lambda());
    REQUIRE(d.has_value());
    CHECK(*d == cof);
    CHECK(*d * lambda() == CycInt(5));
    CHECK_FALSE(div_exact(CycInt(3), CycInt(2)).has_value());
    CHECK_THROWS_AS(div_exact(CycInt(1), CycInt(0)), std::invalid_argument);

    std::mt19937_64 rng(15);
    for (int i = 0; i < 300; ++i) {
        CycInt x = oracle::random_cycint(rng, -10000, 10000);
        CycInt y = oracle::random_cycint(rng, -100, 100);
        if (y.is_zero()) continue;
        auto q = div_exact(x * y, y);
        REQUIRE(q.has_value());
        CHECK(*q == x);
        CHECK(divides(y, x * y));
    }
}

TEST_CASE("units") {
    for (long k = 0; k < 5; ++k) {
        CHECK(is_unit(z(k)));
        CHECK(is_unit(-z(k)));
    }
    CHECK(is_unit(embed_quadratic({0, 1})));
    CHECK_FALSE(is_unit(CycInt(2)));
    CHECK_FALSE(is_unit(lambda()));
}

TEST_CASE("quadratic subring") {
    CHECK(embed_quadratic({1, 0}) == CycInt(1));
    CycInt phi = embed_quadratic({0, 1});
    CHECK(phi == CycInt(0, 0, -1, -1));
    CHECK((phi * phi - phi - CycInt(1)).is_zero());
    CycInt pi = embed_quadratic({4, 3});
    CHECK(pi == CycInt(4, 0, -3, -3));
    CHECK(quadratic_norm({4, 3}) == 19);
    CHECK(norm(pi) == 361);

    std::mt19937_64 rng(16);
    std::uniform_int_distribution<long> d(-5000, 5000);
    for (int i = 0; i < 300; ++i) {
        QuadraticInt x{d(rng), d(rng)};
        QuadraticInt y{d(rng), d(rng)};
        CHECK(embed_quadratic(x * y) == embed_quadratic(x) * embed_quadratic(y));
        CHECK(quadratic_norm(x * y) == quadratic_norm(x) * quadratic_norm(y));
        CHECK(norm(embed_quadratic(x)) == quadratic_norm(x) * quadratic_norm(x));
        auto back = as_quadratic(embed_quadratic(x));
        REQUIRE(back.has_value());
        CHECK(*back == x);
    }
    CHECK_FALSE(as_quadratic(z(1)).has_value());
}

TEST_CASE("semiprimary normalization") {
    auto three = semiprimary_normalize(CycInt(3));
    REQUIRE(three.has_value());
    CHECK(*three == CycInt(3));
    auto z3 = semiprimary_normalize(z(1) * CycInt(3));
    REQUIRE(z3.has_value());
    CHECK(*z3 == CycInt(3));
    CHECK_FALSE(semiprimary_normalize(lambda()).has_value());
    CHECK_FALSE(semiprimary_normalize(CycInt(10)).has_value());

    CycInt l2 = lambda() * lambda();
    std::mt19937_64 rng(17);
    int normalized = 0;
    for (int i = 0; i < 300; ++i) {
        CycInt x = oracle::random_cycint(rng, -1000, 1000);
        if (x.is_zero() || norm(x) % 5 == 0) continue;
        auto s = semiprimary_normalize(x);
        REQUIRE(s.has_value());
        ++normalized;
        CHECK(is_semiprimary(*s));
        Int sum = (*s)[0] + (*s)[1] + (*s)[2] + (*s)[3];
        // s differs from its coefficient sum by a multiple of (1 - zeta)^2
        CHECK(div_exact(*s - CycInt(sum), l2).has_value());
        CHECK(is_unit(*div_exact(*s, x)));
    }
    CHECK(normalized > 200);
}

TEST_CASE("text round trip") {
    CycInt x(-12, 0, 7, 123456789);
    CHECK(to_string(x) == "-12,0,7,123456789");
    CHECK(parse_cycint(to_string(x)) == x);
    CHECK(parse_cycint("19") == CycInt(19));
    CHECK(parse_cycint(" 1, 2 ,3,4") == CycInt(1, 2, 3, 4));
    CHECK_THROWS_AS(parse_cycint("1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycint("a,b,c,d"), std::invalid_argument);
}
